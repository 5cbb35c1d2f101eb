#include <doctest.h>

#include "elg/elgebra.hpp"
#include "elg/error.hpp"
#include "elg/multi_index.hpp"

using namespace elg;

namespace {

LieAlg heisenberg_r() { return LieAlg(4, {{1, 2, 3, Rat(1)}}); }

std::shared_ptr<const DataSet> exc(int n) { return std::make_shared<const DataSet>(build_exceptional(n)); }

Elgebra so5() {
  auto ds = std::make_shared<const DataSet>(build_dataset(Family::SLwedge2, 4));
  auto pairs = combinations(5, 2);
  std::vector<BracketEntry> c;
  for (int a = 0; a < 10; ++a) {
    int i = pairs[a][0] - 1, j = pairs[a][1] - 1;
    Matrix gen = Matrix::unit(5, 5, i, j) - Matrix::unit(5, 5, j, i);
    for (int b = 0; b < 10; ++b) {
      Vec v = gl_act(gen, Poly::basis(5, pairs[b])).coords();
      for (int g = 0; g < 10; ++g)
        if (!v[g].is_zero()) c.push_back({a + 1, b + 1, g + 1, v[g]});
    }
  }
  return Elgebra(ds, c);
}

Subspace so4(const Elgebra& e) {
  auto pairs = combinations(5, 2);
  std::vector<Vec> g;
  for (int a = 0; a < 10; ++a)
    if (pairs[a][1] <= 4) g.push_back(unit_vector(10, a));
  return Subspace(e.dataset_ptr(), Ambient::E, g);
}

}  // namespace

TEST_CASE("D is zero for antisymmetric brackets and rejected when it cannot exist") {
  Elgebra e = so5();
  CHECK(e.D().is_zero());
  auto ds = exc(3);
  // A purely symmetric bracket supported on T⊗T cannot factor through N, since T is isotropic.
  std::vector<BracketEntry> bad = {{1, 1, 4, Rat(1)}};
  CHECK_THROWS_AS(Elgebra(ds, bad), InputError);
  auto gl = std::make_shared<const DataSet>(build_dataset(Family::GL, 2));
  CHECK_THROWS_AS(Elgebra(gl, {{1, 2, 1, Rat(1)}}), InputError);
  CHECK_NOTHROW(Elgebra(gl, {{1, 2, 1, Rat(1)}, {2, 1, 1, Rat(-1)}}));
  CHECK_THROWS_AS(Elgebra(ds, {{1, 2, 9, Rat(1)}}), InputError);
  CHECK_THROWS_AS(Elgebra(ds, {}, Matrix(6, 3) + Matrix::unit(6, 3, 0, 0)), InputError);
}

TEST_CASE("D on group elgebras is the Chevalley-Eilenberg differential, corrected by the twist") {
  int n = 5;
  LieAlg k(n, {{1, 2, 3, Rat(1)}, {1, 4, 5, Rat(2)}});
  for (bool twisted : {false, true}) {
    Twist t = zero_twist(n);
    if (twisted) {
      t.F1.add_term({2}, Rat(3));
      t.F4.add_term({1, 2, 3, 4}, Rat(2));
    }
    Elgebra e = from_lie_twisted(k, t);
    int dn = e.dataset().dimN();
    for (int m = 0; m < dn; ++m) {
      ExcNVec nv = exc_nvec(n, unit_vector(dn, m));
      ExcEVec want(n);
      want.s2 = ce_differential(k, nv.n1) + wedge(t.F1, nv.n1);
      want.s5 = ce_differential(k, nv.n4) + Rat(2) * wedge(t.F1, nv.n4) - wedge(t.F4, nv.n1);
      CHECK(exc_evec(n, e.D().col(m)) == want);
    }
  }
}

TEST_CASE("verification of standard examples") {
  CHECK(verify_elgebra(so5()).pass());
  Elgebra ab = from_lie_twisted(LieAlg::abelian(4), zero_twist(4));
  CHECK(verify_elgebra(ab).pass());
  CHECK(ab.entries().empty());
  LieAlg solv(4, {{1, 4, 1, Rat(-1)}, {2, 4, 2, Rat(-1)}, {3, 4, 3, Rat(-2)}, {1, 2, 3, Rat(1)}});
  CHECK(verify_elgebra(from_lie_twisted(solv, zero_twist(4))).pass());
  Twist t = zero_twist(4);
  t.F1.add_term({4}, Rat(1));
  t.F4.add_term({1, 2, 3, 4}, Rat(5));
  CHECK(check_twist_integrability(heisenberg_r(), t));
  CHECK(verify_elgebra(from_lie_twisted(heisenberg_r(), t)).pass());
  CHECK_THROWS_AS(from_lie_twisted(LieAlg::abelian(2), zero_twist(2)), InputError);
}

TEST_CASE("non-integrable twists break Leibniz with a witness") {
  Twist t = zero_twist(4);
  t.F1.add_term({3}, Rat(1));
  CHECK(ce_differential(heisenberg_r(), t.F1) == Rat(-1) * Form::basis(4, {1, 2}));
  CHECK(!check_twist_integrability(heisenberg_r(), t));
  Elgebra e = from_lie_twisted(heisenberg_r(), t);
  VerificationReport r = verify_elgebra(e);
  const Check* l = r.find("leibniz");
  REQUIRE(l);
  CHECK(!l->pass);
  CHECK(!l->witness.empty());
  CHECK(check_twist_integrability(LieAlg::abelian(4), Twist{Form(4, 1), Form::basis(4, {1, 2, 3, 4})}));
  CHECK(check_twist_integrability(heisenberg_r(), zero_twist(4)));
}

TEST_CASE("the Jacobiator on (X, Y, σ₂) matches the closed form") {
  int n = 5;
  LieAlg k(n, {{1, 2, 3, Rat(1)}, {1, 3, 4, Rat(1)}});
  Twist t = zero_twist(n);
  t.F1.add_term({3}, Rat(2));
  t.F4.add_term({1, 2, 4, 5}, Rat(1));
  t.F4.add_term({2, 3, 4, 5}, Rat(-1));
  Elgebra e = from_lie_twisted(k, t);
  int mismatches = 0, nonzero = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& s : combinations(n, 2)) {
        ExcEVec x(n), y(n), z(n);
        x.X = Poly::basis(n, {i});
        y.X = Poly::basis(n, {j});
        z.s2 = Form::basis(n, s);
        Vec got = jacobiator(e, coords(x), coords(y), coords(z));
        if (!is_zero(got)) ++nonzero;
        if (got != predicted_jacobiator(k, t, x.X, y.X, z.s2)) ++mismatches;
      }
  CHECK(mismatches == 0);
  CHECK(nonzero > 0);
  Elgebra lie = so5();
  CHECK(is_zero(jacobiator(lie, unit_vector(10, 0), unit_vector(10, 4), unit_vector(10, 7))));
}

TEST_CASE("Lemma properties of D hold on valid elgebras") {
  for (int n : {4, 5}) {
    LieAlg k(n, {{1, 2, 3, Rat(1)}});
    VerificationReport r = verify_elgebra(from_lie_twisted(k, zero_twist(n)));
    CHECK(r.find("image_D_central")->pass);
    CHECK(r.find("D_equivariant")->pass);
  }
}

TEST_CASE("quotients by the image of D") {
  Quotient q = quotient_gE(so5());
  CHECK(q.algebra.dim() == 10);
  CHECK(!q.algebra.jacobi_failure());
  Elgebra ab = from_lie_twisted(LieAlg::abelian(4), zero_twist(4));
  Quotient qa = quotient_gE(ab);
  CHECK(qa.algebra.dim() == 10);
  CHECK(qa.algebra.entries().empty());
  Elgebra h = from_lie_twisted(heisenberg_r(), zero_twist(4));
  Quotient qh = quotient_gE(h);
  CHECK(qh.algebra.dim() == h.dim() - rank(h.D()));
  CHECK(rank(h.D()) == 1);
}

TEST_CASE("subalgebras, parallelisations and duality") {
  Elgebra s = so5();
  CHECK(is_subalgebra(s, Subspace::whole(s.dataset_ptr(), Ambient::E)));
  CHECK(is_subalgebra(s, so4(s)));
  ParallelisationCertificate c = check_parallelisation(s, so4(s));
  CHECK(c.pass());
  CHECK(c.dim_gE == 10);
  CHECK(c.dim_gV == 6);

  Elgebra h = from_lie_twisted(heisenberg_r(), zero_twist(4));
  Subspace v = standard_colagrangian(h.dataset_ptr());
  CHECK(check_parallelisation(h, v).pass());
  // [X₁, X₂] = X₃ leaves span(X₁, X₂).
  auto fail = subalgebra_failure(h, Subspace(h.dataset_ptr(), Ambient::E, {unit_vector(10, 0), unit_vector(10, 1)}));
  REQUIRE(fail.has_value());
  CHECK(*fail == std::make_pair(1, 2));

  Elgebra ab = from_lie_twisted(LieAlg::abelian(4), zero_twist(4));
  Subspace v1 = standard_colagrangian(ab.dataset_ptr());
  GroupWord g;
  g.entries.push_back(ExcElem::from(Poly::basis(4, {1, 2, 3})));
  Subspace v2 = g.apply(v1);
  CHECK(!(v1 == v2));
  DualityCertificate d = duality_pair(ab, v1, v2);
  CHECK(d.pass);
  DualityCertificate self = duality_pair(ab, v1, v1);
  CHECK(self.pass);
  CHECK(self.intersection_dim == 6);
  CHECK(!self.trivial_intersection);
  DualityCertificate bad = duality_pair(h, v, Subspace::whole(h.dataset_ptr(), Ambient::E));
  CHECK(!bad.pass);
}

TEST_CASE("coordinate bracket identity") {
  CHECK(coordinate_bracket_identity(so5()).pass);
  CHECK(coordinate_bracket_identity(so5()).mode == "adjoint");
  Elgebra ab = from_lie_twisted(LieAlg::abelian(4), zero_twist(4));
  CHECK(coordinate_bracket_identity(ab).pass);
  CHECK(coordinate_bracket_identity(ab).mode == "lie_model");
  LieAlg k(5, {{1, 2, 3, Rat(1)}, {1, 4, 5, Rat(2)}});
  Twist t = zero_twist(5);
  t.F1.add_term({2}, Rat(1));
  t.F4.add_term({1, 2, 3, 4}, Rat(1));
  CHECK(coordinate_bracket_identity(from_lie_twisted(k, zero_twist(5))).pass);
  CHECK(coordinate_bracket_identity(from_lie_twisted(k, t)).pass);
}
