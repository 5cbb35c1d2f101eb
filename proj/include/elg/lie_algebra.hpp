#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elg/exterior.hpp"
#include "elg/matrix.hpp"

namespace elg {

/// Structure constant entry [e_i, e_j] ∋ value * e_k, with 1-based i < j.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Rat value;
};

/// Finite-dimensional Lie algebra given by structure constants f^k_{ij} in a fixed basis.
/// The constructor rejects input that is not antisymmetric-consistent or violates Jacobi.
class LieAlg {
 public:
  LieAlg() = default;
  /// `entries` lists only i < j; repeated (i, j, k) entries are summed.
  LieAlg(int dim, const std::vector<StructureConstant>& entries);

  static LieAlg abelian(int dim);

  int dim() const { return dim_; }
  /// f^k_{ij} with 1-based indices.
  const Rat& f(int i, int j, int k) const { return f_[index(i, j, k)]; }
  /// Nonzero entries with i < j, in lexicographic order of (i, j, k).
  std::vector<StructureConstant> entries() const;

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad_{e_i} on the algebra (columns are images of basis vectors).
  Matrix ad(int i) const;
  Matrix ad(const Vec& x) const;

  /// First failing Jacobi triple (1-based) with its residual, if any.
  struct JacobiFailure {
    int i, j, k;
    Vec residual;
  };
  std::optional<JacobiFailure> jacobi_failure() const;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1);
  }
  int dim_ = 0;
  std::vector<Rat> f_;
};

/// Chevalley–Eilenberg differential on Λ^• k* with trivial coefficients,
/// δα(x, y) = -α([x, y]) on 1-forms, extended as a graded derivation.
Form ce_differential(const LieAlg& k, const Form& a);

/// Coadjoint action of x on forms, (ad_x α)(y) = -α([x, y]), extended as a derivation.
Form ad_form(const LieAlg& k, const Vec& x, const Form& a);

}  // namespace elg
