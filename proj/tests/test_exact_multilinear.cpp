#include <doctest.h>

#include <random>

#include "elg/error.hpp"
#include "elg/exterior.hpp"
#include "elg/lie_algebra.hpp"
#include "elg/matrix.hpp"
#include "elg/multi_index.hpp"
#include "elg/rat.hpp"

using namespace elg;

namespace {

// Brute-force oracle: coefficient of e^{sorted(I ∪ J)} in e^I ∧ e^J via explicit permutation parity.
int wedge_sign_oracle(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex all = a;
  all.insert(all.end(), b.begin(), b.end());
  int inversions = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return 0;
      if (all[i] > all[j]) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

Form random_form(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  Form f(n, k);
  for (const auto& idx : combinations(n, k)) f.add_term(idx, Rat(v(rng)));
  return f;
}

Poly random_poly(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  Poly f(n, k);
  for (const auto& idx : combinations(n, k)) f.add_term(idx, Rat(v(rng)));
  return f;
}

}  // namespace

TEST_CASE("rationals parse, print and normalize") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-2") == Rat(-2));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("x"), InputError);
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
}

TEST_CASE("combinations and permutation signs") {
  CHECK(combinations(4, 2).size() == 6);
  CHECK(combinations(4, 2)[0] == MultiIndex{1, 2});
  CHECK(combination_rank(5, {2, 4}) == 5);
  std::vector<int> s{2, 1, 3};
  CHECK(permutation_sign(s) == -1);
  std::vector<int> r{1, 1};
  CHECK(permutation_sign(r) == 0);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("wedge product examples") {
  int n = 4;
  CHECK(wedge(Form::basis(n, {1}), Form::basis(n, {2})) == Form::basis(n, {1, 2}));
  Form a = Form::basis(n, {1}) + Form::basis(n, {3});
  CHECK(wedge(a, a).is_zero());
  Form lhs = wedge(Form::basis(n, {2, 1}), Form::basis(n, {3}));
  CHECK(lhs.coeff({1, 2, 3}) == Rat(-1));
}

TEST_CASE("wedge signs agree with the permutation-parity oracle") {
  int n = 6;
  for (const auto& i : combinations(n, 2))
    for (const auto& j : combinations(n, 3)) {
      Form w = wedge(Form::basis(n, i), Form::basis(n, j));
      MultiIndex all = i;
      all.insert(all.end(), j.begin(), j.end());
      std::sort(all.begin(), all.end());
      int s = wedge_sign_oracle(i, j);
      if (s == 0) CHECK(w.is_zero());
      else CHECK(w.coeff(all) == Rat(s));
    }
}

TEST_CASE("interior product conventions") {
  int n = 3;
  CHECK(interior(Poly::basis(n, {1}), Form::basis(n, {1, 2})) == Form::basis(n, {2}));
  CHECK(interior(Poly::basis(n, {2}), Form::basis(n, {1, 2})) == Rat(-1) * Form::basis(n, {1}));
  CHECK(interior(Poly::basis(n, {1, 2}), Form::basis(n, {1, 2, 3})) == Form::basis(n, {3}));
  // ι_{x∧y} = ι_y ∘ ι_x.
  std::mt19937_64 rng(3);
  Form a = random_form(5, 4, rng);
  Poly x = random_poly(5, 1, rng), y = random_poly(5, 1, rng);
  CHECK(interior(wedge(x, y), a) == interior(y, interior(x, a)));
}

TEST_CASE("interior is an antiderivation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Form a = random_form(5, 2, rng), b = random_form(5, 2, rng);
    Poly x = random_poly(5, 1, rng);
    CHECK(interior(x, wedge(a, b)) == wedge(interior(x, a), b) + wedge(a, interior(x, b)));
  }
}

TEST_CASE("pairing and star") {
  int n = 4;
  CHECK(pairing(Form::basis(n, {1, 2}), Poly::basis(n, {1, 2})) == Rat(1));
  CHECK(pairing(Form::basis(n, {1, 2}), Poly::basis(n, {1, 3})).is_zero());
  Matrix s = star(Form::basis(n, {1, 2}), Poly::basis(n, {1, 2}));
  Matrix expect(n, n);
  expect(0, 0) = Rat(1);
  expect(1, 1) = Rat(1);
  CHECK(s == expect);
  CHECK(star(Form(n, 2), Poly::basis(n, {1, 2})).is_zero());
  std::mt19937_64 rng(9);
  for (int k = 1; k <= 3; ++k) {
    Form a = random_form(n, k, rng);
    Poly w = random_poly(n, k, rng);
    CHECK(star(a, w).trace() == Rat(k) * pairing(a, w));
  }
}

TEST_CASE("jmap") {
  // (ι_{e_2} e¹²) ∧ e²³⁴⁵⁶ = −e¹∧e²³⁴⁵⁶, and slot 1 vanishes.
  TStarLambda6 j = jmap(Form::basis(6, {1, 2}), Form::basis(6, {2, 3, 4, 5, 6}));
  CHECK(j.slots[0].is_zero());
  CHECK(j.slots[1] == Rat(-1) * Form::basis(6, {1, 2, 3, 4, 5, 6}));
  for (int i = 2; i < 6; ++i) CHECK(j.slots[i].is_zero());
  CHECK(jmap(Form::basis(5, {1, 2}), Form::basis(5, {1, 2, 3, 4, 5})).is_zero());
  CHECK(jmap(Form(6, 2), Form::basis(6, {2, 3, 4, 5, 6})).is_zero());
}

TEST_CASE("gl action is a derivation with the contragredient on forms") {
  std::mt19937_64 rng(2);
  Matrix a(4, 4);
  std::uniform_int_distribution<int> v(-2, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Rat(v(rng));
  Form f = random_form(4, 1, rng), h = random_form(4, 2, rng);
  CHECK(gl_act(a, wedge(f, h)) == wedge(gl_act(a, f), h) + wedge(f, gl_act(a, h)));
  Poly x = random_poly(4, 1, rng);
  // ⟨A·α, x⟩ + ⟨α, A·x⟩ = 0.
  CHECK(pairing(gl_act(a, f), x) + pairing(f, gl_act(a, x)) == Rat(0));
}

TEST_CASE("matrix linear algebra") {
  Matrix m = Matrix::from_rows({{Rat(1), Rat(2)}, {Rat(3), Rat(4)}}, 2);
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Matrix::identity(2));
  Matrix s = Matrix::from_rows({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
  CHECK(!inverse(s));
  CHECK(rank(s) == 1);
  auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(s * ns[0]));
  SpanSolver sp({{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}}, 3);
  CHECK(sp.contains({Rat(2), Rat(3), Rat(5)}));
  CHECK(!sp.contains({Rat(0), Rat(0), Rat(1)}));
  auto c = sp.coordinates({Rat(2), Rat(3), Rat(5)});
  REQUIRE(c);
  CHECK((*c)[0] == Rat(2));
  CHECK((*c)[1] == Rat(3));
  Matrix nil = Matrix::unit(3, 3, 0, 1) + Matrix::unit(3, 3, 1, 2);
  Matrix e = exp_nilpotent(nil);
  CHECK(e(0, 2) == Rat(1, 2));
}

TEST_CASE("Lie algebras and the Chevalley-Eilenberg differential") {
  LieAlg heis(3, {{1, 2, 3, Rat(1)}});
  CHECK(ce_differential(heis, Form::basis(3, {3})) == Rat(-1) * Form::basis(3, {1, 2}));
  CHECK(ce_differential(LieAlg::abelian(4), Form::basis(4, {1, 2})).is_zero());
  // A non-Jacobi bracket is rejected.
  CHECK_THROWS_AS(LieAlg(3, {{1, 2, 3, Rat(1)}, {2, 3, 1, Rat(1)}, {1, 3, 3, Rat(1)}}), InputError);
  // δ² = 0 on a solvable algebra.
  LieAlg s(4, {{1, 4, 1, Rat(-1)}, {2, 4, 2, Rat(-1)}, {3, 4, 3, Rat(-2)}, {1, 2, 3, Rat(1)}});
  std::mt19937_64 rng(4);
  for (int k = 1; k <= 2; ++k) {
    Form a = random_form(4, k, rng);
    CHECK(ce_differential(s, ce_differential(s, a)).is_zero());
  }
  // Cartan: ad_x = δ ι_x + ι_x δ.
  Form a = random_form(4, 2, rng);
  Vec x{Rat(1), Rat(-2), Rat(0), Rat(3)};
  Poly px = Poly::from_coords(4, 1, x);
  CHECK(ad_form(s, x, a) == ce_differential(s, interior(px, a)) + interior(px, ce_differential(s, a)));
}
