#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "elg/dataset.hpp"
#include "elg/exc_algebra.hpp"

namespace elg {

enum class Ambient { E, EDual };
std::string to_string(Ambient a);

/// Linear subspace of E or E*, stored as the reduced row-echelon basis (so equality is
/// equality of basis matrices).
class Subspace {
 public:
  Subspace(std::shared_ptr<const DataSet> ds, Ambient ambient, const std::vector<Vec>& generators);
  static Subspace whole(std::shared_ptr<const DataSet> ds, Ambient ambient);
  static Subspace zero(std::shared_ptr<const DataSet> ds, Ambient ambient);

  const DataSet& dataset() const { return *ds_; }
  const std::shared_ptr<const DataSet>& dataset_ptr() const { return ds_; }
  Ambient ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ds_->dimE(); }
  int codim() const { return ambient_dim() - dim(); }
  const std::vector<Vec>& basis() const { return rows_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Subspace operator+(const Subspace& o) const;
  /// Image under a matrix acting on coordinates.
  Subspace transformed(const Matrix& g) const;
  /// The same coordinates read in the other ambient space (E ↔ E*).
  Subspace relabeled(Ambient a) const { return Subspace(ds_, a, rows_); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::shared_ptr<const DataSet> ds_;
  Ambient ambient_;
  std::vector<Vec> rows_;
};

Subspace annihilator(const Subspace& v);

bool is_isotropic(const Subspace& v);
/// Evaluates the definition (V°⊗V°)_{N*} = 0 and the inclusion (V°⊗N)_E ⊂ V; throws
/// InternalError if the two disagree.
bool is_coisotropic(const Subspace& v);
/// span{(ξ⊗m)_E : ξ ∈ V°, m ∈ N}.
Subspace xiN_span(const Subspace& v);

struct ColagrangianResult {
  bool value = false;
  /// "standard" (exceptional equality test), "type1", "type2", "opq", "gl" or "" when false.
  std::string kind;
};

ColagrangianResult is_colagrangian(const Subspace& v);

/// Ordered product of exponentials of nilpotent generators; entries[0] is applied first.
struct GroupWord {
  std::vector<ExcElem> entries;
  bool empty() const { return entries.empty(); }
  void append(const GroupWord& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
  GroupWord inverse() const;
  /// Matrix on E of the whole product.
  Matrix matrix(int n) const;
  Vec apply(const Vec& u, int n) const;
  Subspace apply(const Subspace& s) const;
};

/// Random word of `length` entries drawn from Λ³T*, Λ⁶T*, Λ³T, Λ⁶T and gl(T) transvections, with
/// small rational coefficients.
GroupWord random_word(int n, int length, std::mt19937_64& rng);

/// Checks that every entry is a nilpotent generator of the right size.
void validate_word(const GroupWord& w, int n);

struct NullNormalization {
  GroupWord word;
  Vec image;  // lies in T
};

/// Moves a nonzero null vector into T using generators supported on the first m indices
/// (m = n when omitted). The vector must lie in E_m = T_m ⊕ Λ²T_m* ⊕ Λ⁵T_m*.
NullNormalization normalize_null(const DataSet& ds, const Vec& u, std::optional<int> m = std::nullopt);

enum class OrbitLabel { DimN, DimNMinus1, NotLagrangian };
std::string to_string(OrbitLabel l);

struct LagrangianNormalization {
  GroupWord word;
  OrbitLabel label = OrbitLabel::NotLagrangian;
};

/// The canonical Lagrangians: T (label DimN) and span(e_3..e_n) ⊕ span(e¹∧e²) (label DimNMinus1).
Subspace canonical_lagrangian(std::shared_ptr<const DataSet> ds, OrbitLabel label);
/// Λ²T* ⊕ Λ⁵T*.
Subspace standard_colagrangian(std::shared_ptr<const DataSet> ds);

/// Requires an isotropic subspace of E in the exceptional family.
LagrangianNormalization normalize_lagrangian(const Subspace& w);

/// Generator whose action matrix on E is minus the transpose of that of x.
ExcElem dual_generator(const DataSet& ds, const ExcElem& x);

/// Word mapping (V, W) to (Λ²T*⊕Λ⁵T*, T). Throws PreconditionError naming the first violated
/// hypothesis.
GroupWord normalize_pair(const Subspace& v, const Subspace& w);

}  // namespace elg
