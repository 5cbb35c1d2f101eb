#include <doctest.h>

#include "elg/dataset.hpp"
#include "elg/error.hpp"
#include "elg/exc_algebra.hpp"

using namespace elg;

TEST_CASE("dimension table") {
  const int expect[][2] = {{6, 3}, {10, 5}, {16, 10}, {27, 27}};
  for (int n = 3; n <= 6; ++n) {
    DataSet ds = build_dataset(Family::Exceptional, n);
    CHECK(ds.dimE() == expect[n - 3][0]);
    CHECK(ds.dimN() == expect[n - 3][1]);
  }
  DataSet gl = build_dataset(Family::GL, 5);
  CHECK(gl.dimE() == 5);
  CHECK(gl.dimN() == 0);
  DataSet sl = build_dataset(Family::SLwedge2, 4);
  CHECK(sl.dimE() == 10);
  CHECK(sl.dimN() == 5);
  CHECK_THROWS_AS(build_dataset(Family::Exceptional, 7), InputError);
  CHECK_THROWS_AS(parse_family("e8"), InputError);
}

TEST_CASE("exceptional sym_to_N matches the graded formula") {
  int n = 4;
  DataSet ds = build_dataset(Family::Exceptional, n);
  ExcEVec x(n);
  x.X = Poly::basis(n, {1}) + Rat(2) * Poly::basis(n, {3});
  CHECK(is_zero(ds.sym_to_N(coords(x), coords(x))));
  ExcEVec u = x;
  u.s2 = Form::basis(n, {1, 2}) + Form::basis(n, {3, 4});
  ExcNVec got = exc_nvec(n, ds.sym_to_N(coords(u), coords(u)));
  CHECK(got.n1 == Rat(2) * interior(u.X, u.s2));
  CHECK(got.n4 == Rat(-1) * wedge(u.s2, u.s2));
}

TEST_CASE("SL wedge-two sym_to_N is the wedge product") {
  DataSet ds = build_dataset(Family::SLwedge2, 4);
  // e₁∧e₂ is index 0 and e₃∧e₄ is index 7 among pairs of {1..5}.
  Vec m = ds.sym_to_N(unit_vector(10, 0), unit_vector(10, 7));
  CHECK(m[0] == Rat(1));
  for (int i = 1; i < 5; ++i) CHECK(m[i].is_zero());
}

TEST_CASE("sections and the O(p,q) family") {
  DataSet ds = build_opq(2, 1);
  CHECK(ds.embed_scale() == Rat(3));
  Matrix s = ds.N_to_sym({Rat(1)});
  Matrix eta_inv = *inverse(ds.eta());
  CHECK(s == eta_inv);
  Vec xi{Rat(1), Rat(2), Rat(3)};
  CHECK(ds.xiN_to_E(xi, {Rat(1)}) == eta_inv * xi);
  AdmissibilityCertificate cert = check_admissible(ds);
  CHECK(cert.pass);
  REQUIRE(cert.eta_antisymmetric);
  CHECK(*cert.eta_antisymmetric);
}

TEST_CASE("the section is a right inverse up to the scale") {
  for (Family f : {Family::Exceptional, Family::SLwedge2}) {
    DataSet ds = build_dataset(f, 4);
    for (int m = 0; m < ds.dimN(); ++m) {
      Vec e = unit_vector(ds.dimN(), m);
      CHECK(ds.sym_to_N(ds.N_to_sym(e)) == ds.embed_scale() * e);
    }
  }
}

TEST_CASE("GL has trivial projections") {
  DataSet ds = build_dataset(Family::GL, 3);
  Matrix a = Matrix::unit(3, 3, 0, 2);
  CHECK(ds.pi_prime(a).is_zero());
  CHECK(ds.pi(a) == a);
  CHECK(check_admissible(ds).pass);
}

TEST_CASE("admissibility, equivariance and closure for every family") {
  for (int n = 1; n <= 4; ++n) {
    DataSet gl = build_dataset(Family::GL, n);
    CHECK(check_admissible(gl).pass);
    DataSet o = build_dataset(Family::Opq, n);
    CHECK(o.embed_scale() == Rat(2 * n));
    CHECK(check_admissible(o).pass);
  }
  for (int n = 3; n <= 5; ++n) {
    DataSet ds = build_dataset(Family::Exceptional, n);
    CHECK(ds.embed_scale() == Rat(2 * (n - 1)));
    CHECK(check_admissible(ds).pass);
    CHECK(!ds.equivariance_failure());
    CHECK(!ds.closure_failure());
  }
  for (int n = 2; n <= 5; ++n) {
    DataSet ds = build_dataset(Family::SLwedge2, n);
    CHECK(check_admissible(ds).pass);
    CHECK(!ds.equivariance_failure());
  }
}

TEST_CASE("calibration is unique and reproducible") {
  DataSet ds = build_dataset(Family::Exceptional, 4);
  DataSet copy = ds;
  copy.set_embed_scale(Rat(1));
  CHECK(calibrate(copy) == Rat(6));
  CHECK(check_admissible(copy).pass);
}

TEST_CASE("a corrupted g_basis is detected with a witness") {
  DataSet ds = build_dataset(Family::Exceptional, 4);
  std::vector<Matrix> g = ds.g_basis();
  g.pop_back();
  ds.set_g_basis(g);
  AdmissibilityCertificate cert = check_admissible(ds);
  CHECK(!cert.pass);
  CHECK(cert.witness.has_value());
  CHECK(!is_zero(cert.residual));
  DataSet wrong = build_dataset(Family::Exceptional, 4);
  wrong.set_embed_scale(Rat(5));
  CHECK(!check_admissible(wrong).pass);
}
