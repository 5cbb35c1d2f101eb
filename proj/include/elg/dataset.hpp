#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "elg/error.hpp"
#include "elg/matrix.hpp"

namespace elg {

enum class Family { GL, Opq, Exceptional, SLwedge2 };
std::string to_string(Family f);
/// Accepts "gl", "opq", "exc" (or "exceptional"), "slwedge2".
Family parse_family(const std::string& s);

/// Raised by calibrate when no scale, or more than one, makes the data set admissible.
class CalibrationError : public Error {
 public:
  enum class Kind { NotAdmissible, NonUnique };
  CalibrationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A group data set (G, E, N) with 𝔤 ⊂ End(E) given by a basis, and the maps S²E ↔ N, all in
/// fixed coordinates. Vectors of E, E*, N, N* are coordinate vectors in the family's graded basis
/// (E* and N* use the dual bases).
class DataSet {
 public:
  using Sparse = std::vector<std::pair<int, Rat>>;
  using Entries = std::vector<std::tuple<int, int, Rat>>;

  Family family() const { return family_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int dimE() const { return dimE_; }
  int dimN() const { return dimN_; }
  const Rat& embed_scale() const { return embed_scale_; }
  void set_embed_scale(const Rat& c) { embed_scale_ = c; }
  const std::vector<Matrix>& g_basis() const { return g_basis_; }
  /// Replaces 𝔤 (e.g. when loading from a file); the span solver is rebuilt.
  void set_g_basis(std::vector<Matrix> g);
  const SpanSolver& g_span() const { return g_span_; }
  /// Stable short description: family, size and scale.
  std::string fingerprint() const;

  /// Symmetric bilinear S²E → N.
  Vec sym_to_N(const Vec& u, const Vec& v) const;
  /// Symmetric bilinear S²E* → N*.
  Vec sym_to_Nstar(const Vec& xi, const Vec& eta) const;
  /// sym_to_N applied to a (not necessarily symmetric) tensor Σ t^{ab} e_a⊗e_b.
  Vec sym_to_N(const Matrix& t) const;
  /// embed_scale times the section of sym_to_N dual to sym_to_Nstar, as a symmetric matrix.
  Matrix N_to_sym(const Vec& m) const;
  /// (ξ⊗m)_E: contraction of ξ with the first slot of N_to_sym(m).
  Vec xiN_to_E(const Vec& xi, const Vec& m) const;

  /// π′ with embedding coefficient 1, and its calibrated version.
  Matrix pi_prime_unit(const Matrix& a) const;
  Matrix pi_prime(const Matrix& a) const { return embed_scale_ * pi_prime_unit(a); }
  Matrix pi(const Matrix& a) const { return a - pi_prime(a); }

  /// Action of X ∈ End(E) on N by pushing X⊗1 + 1⊗X through the unit section.
  Vec act_N(const Matrix& x, const Vec& m) const;
  Matrix act_N_matrix(const Matrix& x) const;
  /// Contragredient action on E*.
  static Matrix dual_action(const Matrix& x) { return Rat(-1) * x.transpose(); }

  /// First pair (g, e_a⊗e_b) on which sym_to_N fails to intertwine the 𝔤 action.
  std::optional<std::string> equivariance_failure() const;
  /// Linear dependence or a commutator leaving the span of g_basis.
  std::optional<std::string> closure_failure() const;

  /// Inner product for the Opq family.
  const Matrix& eta() const { return eta_; }

  friend DataSet build_dataset(Family family, int n);
  friend DataSet build_opq(int p, int q);
  friend DataSet build_exceptional(int n);

 private:
  DataSet() = default;
  void finish();  // section, π′ table, span solver

  Family family_ = Family::GL;
  int n_ = 0, p_ = 0, q_ = 0;
  int dimE_ = 0, dimN_ = 0;
  Rat embed_scale_{1};
  std::vector<Matrix> g_basis_;
  SpanSolver g_span_;
  Matrix eta_;
  std::vector<Sparse> sym_;      // [a*dimE+b] -> N coordinates
  std::vector<Sparse> symstar_;  // [a*dimE+b] -> N* coordinates
  std::vector<Entries> by_m_;    // by_m_[m]: (a, b, S^m_ab) for all ordered pairs
  std::vector<Entries> section_; // section_[m]: (a, b, s^{ab}) with embedding coefficient 1
  std::vector<Entries> pprime_;  // [k*dimE+j]: entries (i, l) of π′₁(E_kj)
};

/// GL(n), O(n,n), exceptional (n = 3..6) or SL(n+1)×R⁺ on Λ²R^{n+1}; calibrated.
DataSet build_dataset(Family family, int n);
DataSet build_opq(int p, int q);
/// Exceptional data set, also for n = 2 (used as the base of the Lagrangian recursion).
DataSet build_exceptional(int n);

/// Finds and stores the unique c with A − c·π′₁(A) ∈ 𝔤 for every matrix unit A.
Rat calibrate(DataSet& ds);

struct AdmissibilityCertificate {
  bool pass = true;
  /// coords[k*dimE + j] = coordinates of π(E_kj) in g_basis (empty when absent).
  std::vector<Vec> coords;
  /// 1-based matrix unit (k, j) where membership fails.
  std::optional<std::pair<int, int>> witness;
  Vec residual;
  /// Opq only: π(A) is η-antisymmetric for every matrix unit.
  std::optional<bool> eta_antisymmetric;
};

AdmissibilityCertificate check_admissible(const DataSet& ds);

}  // namespace elg
