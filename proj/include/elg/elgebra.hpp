#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elg/dataset.hpp"
#include "elg/lie_algebra.hpp"
#include "elg/subspace.hpp"

namespace elg {

/// [e_α, e_β] ∋ value·e_γ, 1-based.
struct BracketEntry {
  int alpha = 0, beta = 0, gamma = 0;
  Rat value;
};

/// Constant twist data on a Lie algebra.
struct Twist {
  Form F1, F4;
};

/// The Lie algebra and twist an elgebra was built from, when it came from from_lie_twisted.
struct LieModel {
  LieAlg k;
  Twist twist;
};

/// A G-algebra: bracket on E given by structure constants and D: N → E.
class Elgebra {
 public:
  using Sparse = std::vector<std::pair<int, Rat>>;

  /// Derives D from the symmetric part of the bracket; throws InputError if it does not factor
  /// through N. When `d` is given it must equal the derived operator.
  Elgebra(std::shared_ptr<const DataSet> ds, const std::vector<BracketEntry>& c,
          const std::optional<Matrix>& d = std::nullopt);

  const DataSet& dataset() const { return *ds_; }
  const std::shared_ptr<const DataSet>& dataset_ptr() const { return ds_; }
  int dim() const { return ds_->dimE(); }
  const Matrix& D() const { return D_; }
  std::vector<BracketEntry> entries() const;

  Vec bracket(const Vec& u, const Vec& v) const;
  /// Matrix of [e_α, ·] (0-based α).
  const Matrix& ad(int alpha) const { return ad_[alpha]; }
  Matrix ad(const Vec& u) const;

  const std::optional<LieModel>& model() const { return model_; }
  void set_model(LieModel m) { model_ = std::move(m); }

 private:
  std::shared_ptr<const DataSet> ds_;
  std::vector<Sparse> table_;  // [α*d+β] -> coordinates of [e_α, e_β]
  std::vector<Matrix> ad_;
  Matrix D_;
  std::optional<LieModel> model_;
};

/// Solves D(e_α⊗e_β)_N = [e_α,e_β] + [e_β,e_α] for all pairs.
Matrix derive_D(const DataSet& ds, const std::vector<BracketEntry>& c);

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool pass() const;
  const Check* find(const std::string& name) const;
};

/// Leibniz identity, symmetric part against D, ad-operators in 𝔤, [Dn, u] = 0 and
/// [u, Dn] = D(u·n), all on full bases.
VerificationReport verify_elgebra(const Elgebra& e);

Vec jacobiator(const Elgebra& e, const Vec& u, const Vec& v, const Vec& w);

/// E = 𝔨 ⊕ Λ²𝔨* ⊕ Λ⁵𝔨* with the twisted bracket, on the exceptional data set of size dim 𝔨.
Elgebra from_lie_twisted(const LieAlg& k, const Twist& t);
/// The same, reusing an already built data set of the right size.
Elgebra from_lie_twisted(const LieAlg& k, const Twist& t, std::shared_ptr<const DataSet> ds);
Twist zero_twist(int n);

/// δF₁ = 0 and δF₄ + F₁∧F₄ = 0.
bool check_twist_integrability(const LieAlg& k, const Twist& t);
/// The closed-form value of J(X, Y, σ₂): σ₂·ι_Yι_X δF₁ + σ₂∧ι_Yι_X(δF₄ + F₁∧F₄), in E coordinates.
Vec predicted_jacobiator(const LieAlg& k, const Twist& t, const Poly& x, const Poly& y, const Form& s2);

struct Quotient {
  LieAlg algebra;
  Matrix projection;          // dim g_E × dim E
  std::vector<int> lifts;     // E-basis index (0-based) lifting each quotient basis vector
};

/// 𝔤_E = E / Im D; throws PreconditionError if Im D is not a two-sided ideal central on the left.
Quotient quotient_gE(const Elgebra& e);

/// First basis pair (1-based) whose bracket leaves V.
std::optional<std::pair<int, int>> subalgebra_failure(const Elgebra& e, const Subspace& v);
inline bool is_subalgebra(const Elgebra& e, const Subspace& v) { return !subalgebra_failure(e, v); }

struct ParallelisationCertificate {
  std::vector<Check> checks;
  int dim_gE = 0;
  int dim_gV = 0;
  bool pass() const;
};

ParallelisationCertificate check_parallelisation(const Elgebra& e, const Subspace& v);

struct DualityCertificate {
  ParallelisationCertificate first, second;
  bool pass = false;
  /// 𝔤_{V1} ∩ 𝔤_{V2} = 0 inside 𝔤_E.
  bool trivial_intersection = false;
  int intersection_dim = 0;
};

DualityCertificate duality_pair(const Elgebra& e, const Subspace& v1, const Subspace& v2);

struct IdentityResult {
  bool pass = true;
  /// "lie_model" when checked against the frame expansion, "adjoint" for the generic reduction.
  std::string mode;
  std::string witness;
};

/// For elgebras built from a Lie algebra: every structure constant equals
/// ρ(u)v − π(d̂u)v + A(u)·v evaluated at the identity in exponential coordinates. For other
/// elgebras: every ad-operator lies in π(End E).
IdentityResult coordinate_bracket_identity(const Elgebra& e);

}  // namespace elg
