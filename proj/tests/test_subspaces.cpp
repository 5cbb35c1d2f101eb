#include <doctest.h>

#include <random>

#include "elg/error.hpp"
#include "elg/multi_index.hpp"
#include "elg/subspace.hpp"

using namespace elg;

namespace {

std::shared_ptr<const DataSet> exc(int n) { return std::make_shared<const DataSet>(build_dataset(Family::Exceptional, n)); }

Subspace span_units(std::shared_ptr<const DataSet> ds, int from, int to, Ambient a = Ambient::E) {
  std::vector<Vec> g;
  for (int i = from; i < to; ++i) g.push_back(unit_vector(ds->dimE(), i));
  return Subspace(ds, a, g);
}

}  // namespace

TEST_CASE("subspaces are stored canonically") {
  auto ds = exc(3);
  Vec a = unit_vector(6, 0), b = unit_vector(6, 1);
  Subspace s1(ds, Ambient::E, {a, b});
  Subspace s2(ds, Ambient::E, {a + b, a - b, a});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains(Rat(3) * a - b));
  CHECK(!s1.contains(unit_vector(6, 4)));
  CHECK_THROWS_AS(Subspace(ds, Ambient::E, {Vec(5)}), InputError);
}

TEST_CASE("annihilators") {
  auto ds = exc(4);
  CHECK(annihilator(Subspace::whole(ds, Ambient::E)).dim() == 0);
  auto o = std::make_shared<const DataSet>(build_dataset(Family::Opq, 2));
  Subspace v(o, Ambient::E, {unit_vector(4, 0)});
  CHECK(annihilator(v).dim() == 3);
  CHECK(annihilator(annihilator(v)) == v);
}

TEST_CASE("isotropy and coisotropy") {
  auto ds = exc(5);
  Subspace t = span_units(ds, 0, 5);
  CHECK(is_isotropic(t));
  Subspace v = standard_colagrangian(ds);
  CHECK(is_coisotropic(v));
  CHECK(!is_isotropic(Subspace::whole(ds, Ambient::E)));
  auto gl = std::make_shared<const DataSet>(build_dataset(Family::GL, 3));
  CHECK(is_coisotropic(Subspace::zero(gl, Ambient::E)));
  CHECK(is_coisotropic(span_units(gl, 0, 1)));
}

TEST_CASE("co-Lagrangian classification by family") {
  auto ds = exc(4);
  auto v = is_colagrangian(standard_colagrangian(ds));
  CHECK(v.value);
  CHECK(v.kind == "standard");
  CHECK(standard_colagrangian(ds).codim() == 4);
  CHECK(!is_colagrangian(Subspace::whole(ds, Ambient::E)).value);

  auto sl = std::make_shared<const DataSet>(build_dataset(Family::SLwedge2, 4));
  auto pairs = combinations(5, 2);
  std::vector<Vec> g;
  for (int a = 0; a < 10; ++a)
    if (pairs[a][1] <= 4) g.push_back(unit_vector(10, a));
  auto r = is_colagrangian(Subspace(sl, Ambient::E, g));
  CHECK(r.value);
  CHECK(r.kind == "type1");

  auto gl = std::make_shared<const DataSet>(build_dataset(Family::GL, 3));
  CHECK(is_colagrangian(Subspace::zero(gl, Ambient::E)).value);
  CHECK(!is_colagrangian(span_units(gl, 0, 1)).value);

  auto o = std::make_shared<const DataSet>(build_opq(2, 2));
  Subspace null2(o, Ambient::E, {unit_vector(4, 0) + unit_vector(4, 2), unit_vector(4, 1) + unit_vector(4, 3)});
  CHECK(is_colagrangian(null2).value);
}

TEST_CASE("the co-Lagrangian criterion separates larger coisotropic subspaces") {
  for (int n = 3; n <= 5; ++n) {
    auto ds = exc(n);
    Subspace v = standard_colagrangian(ds);
    CHECK(xiN_span(v) == v);
    Subspace w = v + span_units(ds, 0, 1);
    CHECK(is_coisotropic(w));
    CHECK(!(xiN_span(w) == w));
  }
}

TEST_CASE("null vectors are moved into T") {
  int n = 4;
  auto ds = exc(n);
  ExcEVec x(n);
  x.X = Poly::basis(n, {2});
  auto r = normalize_null(*ds, coords(x));
  CHECK(r.word.empty());
  CHECK(r.image == coords(x));

  ExcEVec u(n);
  u.X = Poly::basis(n, {1});
  u.s2 = Form::basis(n, {2, 3});
  auto r2 = normalize_null(*ds, coords(u));
  CHECK(r2.word.apply(coords(u), n) == r2.image);
  CHECK(exc_evec(n, r2.image).s2.is_zero());

  ExcEVec s(n);
  s.s2 = Form::basis(n, {1, 2});
  auto r3 = normalize_null(*ds, coords(s));
  ExcEVec img = exc_evec(n, r3.image);
  CHECK(!img.X.is_zero());
  CHECK(img.s2.is_zero());
  CHECK(img.s5.is_zero());

  ExcEVec bad(n);
  bad.s2 = Form::basis(n, {1, 2}) + Form::basis(n, {3, 4});
  CHECK_THROWS_AS(normalize_null(*ds, coords(bad)), PreconditionError);
}

TEST_CASE("Lagrangian orbits") {
  auto ds = exc(4);
  auto t = normalize_lagrangian(canonical_lagrangian(ds, OrbitLabel::DimN));
  CHECK(t.label == OrbitLabel::DimN);
  CHECK(t.word.empty());

  auto d2 = std::make_shared<const DataSet>(build_exceptional(2));
  Subspace l2 = span_units(d2, 2, 3);
  CHECK(normalize_lagrangian(l2).label == OrbitLabel::DimNMinus1);

  std::mt19937_64 rng(17);
  for (OrbitLabel label : {OrbitLabel::DimN, OrbitLabel::DimNMinus1})
    for (int trial = 0; trial < 20; ++trial) {
      Subspace base = canonical_lagrangian(ds, label);
      Subspace moved = random_word(4, 6, rng).apply(base);
      auto r = normalize_lagrangian(moved);
      CHECK(r.label == label);
      CHECK(r.word.apply(moved) == base);
    }
  CHECK_THROWS_AS(normalize_lagrangian(Subspace::whole(ds, Ambient::E)), PreconditionError);
}

TEST_CASE("group words") {
  std::mt19937_64 rng(5);
  int n = 5;
  GroupWord w = random_word(n, 8, rng);
  Matrix m = w.matrix(n);
  Matrix mi = w.inverse().matrix(n);
  CHECK(m * mi == Matrix::identity(exc_dimE(n)));
  CHECK_NOTHROW(validate_word(w, n));
  GroupWord bad;
  bad.entries.push_back(ExcElem::central(n, Rat(1)));
  CHECK_THROWS(validate_word(bad, n));
}

TEST_CASE("pairs of a co-Lagrangian and a complementary Lagrangian") {
  for (int n : {3, 4, 5}) {
    auto ds = exc(n);
    Subspace v = standard_colagrangian(ds);
    Subspace t = canonical_lagrangian(ds, OrbitLabel::DimN);
    CHECK(normalize_pair(v, t).empty());
    ExcElem a3 = ExcElem::from(Form::basis(n, {1, 2, 3}));
    GroupWord g;
    g.entries.push_back(a3);
    Subspace moved = g.apply(t);
    GroupWord back = normalize_pair(v, moved);
    CHECK(back.apply(v) == v);
    CHECK(back.apply(moved) == t);
    std::mt19937_64 rng(n);
    for (int trial = 0; trial < 5; ++trial) {
      GroupWord r = random_word(n, 5, rng);
      Subspace rv = r.apply(v), rt = r.apply(t);
      GroupWord h = normalize_pair(rv, rt);
      CHECK(h.apply(rv) == v);
      CHECK(h.apply(rt) == t);
    }
  }
  auto ds = exc(4);
  CHECK_THROWS_AS(normalize_pair(Subspace::whole(ds, Ambient::E), canonical_lagrangian(ds, OrbitLabel::DimN)),
                  PreconditionError);
}
