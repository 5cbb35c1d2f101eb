#include <doctest.h>

#include <cstdio>

#include "elg/error.hpp"
#include "elg/json_io.hpp"

using namespace elg;
using nlohmann::json;

TEST_CASE("rationals and forms") {
  CHECK(io::to_json(Rat(-3, 4)) == json("-3/4"));
  CHECK(io::rat_from_json(json(5)) == Rat(5));
  CHECK_THROWS_AS(io::rat_from_json(json(1.5)), InputError);
  Form f = Form::basis(4, {1, 3}) + Rat(2, 3) * Form::basis(4, {2, 4});
  CHECK(io::form_from_json(io::to_json(f)) == f);
  json j = io::to_json(f);
  CHECK(j["terms"][0][0] == json::array({1, 3}));
  CHECK_THROWS_AS(io::form_from_json(json{{"dim", 3}, {"deg", 2}, {"terms", {{{1, 4}, "1"}}}}), InputError);
  CHECK_THROWS_AS(io::form_from_json(json{{"dim", 3}}), InputError);
}

TEST_CASE("Lie algebras") {
  LieAlg k(3, {{1, 2, 3, Rat(1)}});
  LieAlg r = io::lie_from_json(io::to_json(k));
  CHECK(r.entries().size() == 1);
  CHECK(r.f(1, 2, 3) == Rat(1));
  CHECK_THROWS_AS(io::lie_from_json(json{{"dim", 3}, {"f", {{2, 1, 3, "1"}}}}), InputError);
}

TEST_CASE("data sets and subspaces") {
  auto ds = std::make_shared<const DataSet>(build_dataset(Family::Exceptional, 3));
  auto back = io::dataset_from_json(io::to_json(*ds, true));
  CHECK(back->fingerprint() == ds->fingerprint());
  CHECK(back->g_basis() == ds->g_basis());
  auto o = io::dataset_from_json(json{{"family", "opq"}, {"p", 2}, {"q", 1}});
  CHECK(o->dimE() == 3);
  CHECK_THROWS_AS(io::dataset_from_json(json{{"family", "e8"}, {"n", 3}}), InputError);
  Subspace v = standard_colagrangian(ds);
  Subspace w = io::subspace_from_json(io::to_json(v));
  CHECK(w == v);
  CHECK(io::to_json(v)["ambient"] == "E");
}

TEST_CASE("elgebras round-trip and reject tampering") {
  LieAlg k(4, {{1, 2, 3, Rat(1)}});
  Twist t = zero_twist(4);
  t.F1.add_term({4}, Rat(1));
  Elgebra e = from_lie_twisted(k, t);
  json j = io::to_json(e);
  Elgebra r = io::elgebra_from_json(j);
  CHECK(r.D() == e.D());
  CHECK(r.entries().size() == e.entries().size());
  CHECK(r.model().has_value());
  json noD = j;
  noD.erase("D");
  CHECK_NOTHROW(io::elgebra_from_json(noD));
  json badD = j;
  badD["D"].push_back(json::array({1, 1, "7"}));
  CHECK_THROWS_AS(io::elgebra_from_json(badD), InputError);
  json badModel = j;
  badModel["F1"] = io::to_json(Form(4, 1));
  CHECK_THROWS_AS(io::elgebra_from_json(badModel), InputError);
}

TEST_CASE("group words") {
  GroupWord w;
  w.entries.push_back(ExcElem::from(Form::basis(4, {1, 2, 3})));
  w.entries.push_back(ExcElem::gl(Matrix::unit(4, 4, 0, 2)));
  GroupWord r = io::word_from_json(io::to_json(w, 4));
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0] == w.entries[0]);
  CHECK(r.entries[1] == w.entries[1]);
}

TEST_CASE("files") {
  std::string path = "json_io_test_tmp.json";
  io::write_file(path, json{{"a", 1}});
  CHECK(io::read_file(path)["a"] == 1);
  std::FILE* f = std::fopen(path.c_str(), "w");
  std::fputs("{oops", f);
  std::fclose(f);
  CHECK_THROWS_AS(io::read_file(path), InputError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(io::read_file("/nonexistent/x.json"), InputError);
}
