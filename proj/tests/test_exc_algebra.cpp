#include <doctest.h>

#include <random>

#include "elg/dataset.hpp"
#include "elg/exc_algebra.hpp"
#include "elg/multi_index.hpp"

using namespace elg;

namespace {

Rat third(int k) { return Rat(k, 3); }

ExcElem random_elem(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-2, 2);
  int d = exc_algebra_dim(n);
  Vec c(d);
  for (auto& x : c) x = Rat(v(rng));
  return exc_from_coords(n, c);
}

}  // namespace

TEST_CASE("algebra dimensions") {
  CHECK(exc_algebra_dim(3) == 12);
  CHECK(exc_algebra_dim(4) == 25);
  CHECK(exc_algebra_dim(5) == 46);
  CHECK(exc_algebra_dim(6) == 79);
  CHECK(exc_dimE(6) == 27);
  CHECK(exc_dimN(5) == 10);
}

TEST_CASE("bracket examples") {
  int n = 6;
  ExcElem a = ExcElem::from(Form::basis(n, {1, 2, 3}));
  ExcElem b = ExcElem::from(Form::basis(n, {4, 5, 6}));
  ExcElem ab = exc_bracket(a, b);
  CHECK(piece_of(ab) == Piece::A6);
  CHECK(ab.a6 == Rat(-1) * Form::basis(n, {1, 2, 3, 4, 5, 6}));

  ExcElem w = ExcElem::from(Poly::basis(n, {1, 2, 3}));
  ExcElem wa = exc_bracket(w, a);
  Matrix expect(n, n);
  for (int i = 0; i < 3; ++i) expect(i, i) = Rat(1);
  expect = expect - third(1) * Matrix::identity(n);
  CHECK(wa.A == expect);
  CHECK(wa.c == third(1));
  CHECK(wa.a3.is_zero());
  CHECK(wa.w3.is_zero());

  std::mt19937_64 rng(1);
  for (int t = 0; t < 5; ++t) {
    ExcElem x = random_elem(4, rng);
    CHECK(exc_bracket(x, x).is_zero());
  }
}

TEST_CASE("coordinates round-trip") {
  std::mt19937_64 rng(2);
  ExcElem x = random_elem(5, rng);
  CHECK(exc_from_coords(5, exc_coords(x)) == x);
  CHECK(static_cast<int>(exc_basis(5).size()) == 46);
}

TEST_CASE("action on E") {
  int n = 4;
  ExcElem a = ExcElem::from(Form::basis(n, {1, 2, 3}));
  ExcEVec u(n);
  u.X = Poly::basis(n, {1});
  ExcEVec au = act_E(a, u);
  CHECK(au.X.is_zero());
  CHECK(au.s2 == interior(u.X, a.a3));

  u.s2 = Form::basis(n, {2, 4});
  ExcEVec cu = act_E(ExcElem::central(n, Rat(3)), u);
  CHECK(coords(cu) == Rat(3) * coords(u));

  ExcElem w6(n);
  w6.w6 = Poly(n, 6);
  CHECK(act_E(w6, u).is_zero());
}

TEST_CASE("act_E is a representation") {
  std::mt19937_64 rng(3);
  for (int n : {3, 4}) {
    for (int t = 0; t < 5; ++t) {
      ExcElem x = random_elem(n, rng), y = random_elem(n, rng);
      CHECK(act_E_matrix(exc_bracket(x, y)) == commutator(act_E_matrix(x), act_E_matrix(y)));
    }
  }
}

TEST_CASE("action on N") {
  int n = 4;
  DataSet ds = build_dataset(Family::Exceptional, n);
  ExcNVec m(n);
  m.n1 = Form::basis(n, {2});
  m.n4 = Form::basis(n, {1, 2, 3, 4});
  ExcNVec cm = act_N(ds, ExcElem::central(n, Rat(1)), m);
  CHECK(coords(cm) == Rat(2) * coords(m));
  // The identity of gl(T) scales a p-form by −p.
  ExcNVec im = act_N(ds, ExcElem::gl(Matrix::identity(n)), m);
  CHECK(im.n1 == Rat(-1) * m.n1);
  CHECK(im.n4 == Rat(-4) * m.n4);
}

TEST_CASE("embedding into e_n") {
  int n = 6;
  ExcElem x = embed_e_n(ExcElem::gl(Matrix::identity(n)));
  CHECK(x.c == Rat(2));
  ExcElem y = embed_e_n(ExcElem::gl(Matrix::unit(n, n, 0, 1)));
  CHECK(y.c.is_zero());
}

TEST_CASE("exponentials of nilpotent generators") {
  int n = 6;
  ExcElem a3 = ExcElem::from(Form::basis(n, {1, 2, 3}) + Form::basis(n, {1, 4, 5}));
  ExcEVec u(n);
  u.X = Poly::basis(n, {1}) + Poly::basis(n, {2});
  Form i = interior(u.X, a3.a3);
  ExcEVec expect(n);
  expect.X = u.X;
  expect.s2 = i;
  expect.s5 = Rat(1, 2) * wedge(a3.a3, i);
  CHECK(exp_nilpotent(a3, u) == expect);
  CHECK(exp_nilpotent(ExcElem::from(Form(n, 3)), u) == u);

  // e^{a₆}·(X + σ₅′) = X when a₆ = σ₅′∧ξ and ⟨ξ, X⟩ = 1.
  Form s5 = Form::basis(n, {2, 3, 4, 5, 6});
  Form xi = Form::basis(n, {1});
  ExcEVec v(n);
  v.X = Poly::basis(n, {1});
  v.s5 = s5;
  ExcEVec r = exp_nilpotent(ExcElem::from(wedge(s5, xi)), v);
  ExcEVec want(n);
  want.X = v.X;
  CHECK(r == want);
  CHECK(!is_nilpotent_generator(ExcElem::central(n, Rat(1))));
}

TEST_CASE("full verification at small sizes") {
  for (int n : {3, 4}) {
    AlgebraReport r = verify_algebra(n);
    CHECK(r.pass());
    CHECK(r.dimension == r.expected_dimension);
  }
}
