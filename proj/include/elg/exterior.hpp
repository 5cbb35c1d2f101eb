#pragma once

#include <map>
#include <vector>

#include "elg/matrix.hpp"
#include "elg/multi_index.hpp"
#include "elg/rat.hpp"

namespace elg {

enum class Variance { Covariant, Contravariant };

/// Homogeneous element of the exterior algebra over T = Q^n (covariant: forms in Λ^k T*,
/// contravariant: polyvectors in Λ^k T). Stored sparsely; zero coefficients are never kept.
template <Variance V>
class ExtElem {
 public:
  using Terms = std::map<MultiIndex, Rat>;

  ExtElem() = default;
  ExtElem(int dim, int deg);
  /// coeff * e^{idx} (or e_{idx}); `idx` need not be sorted, the sign of the sort is applied.
  static ExtElem basis(int dim, MultiIndex idx, const Rat& coeff = Rat(1));
  /// Element whose coefficients, in combinations(dim, deg) order, are `coords`.
  static ExtElem from_coords(int dim, int deg, const Vec& coords);

  int dim() const { return dim_; }
  int deg() const { return deg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const MultiIndex& idx) const;
  /// Adds coeff to the coefficient of the sorted index `idx`.
  void add_term(const MultiIndex& idx, const Rat& coeff);
  Vec coords() const;

  ExtElem& operator+=(const ExtElem& o);
  ExtElem& operator-=(const ExtElem& o);
  ExtElem& operator*=(const Rat& s);
  friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
  friend ExtElem operator-(ExtElem a, const ExtElem& b) { return a -= b; }
  friend ExtElem operator*(const Rat& s, ExtElem a) { return a *= s; }
  ExtElem operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const ExtElem&, const ExtElem&) = default;

 private:
  void check_compatible(const ExtElem& o) const;

  int dim_ = 0;
  int deg_ = 0;
  Terms terms_;
};

using Form = ExtElem<Variance::Covariant>;
using Poly = ExtElem<Variance::Contravariant>;

/// Graded-commutative product. When deg a + deg b exceeds the dimension the result is the zero
/// element of that (empty) degree.
template <Variance V>
ExtElem<V> wedge(const ExtElem<V>& a, const ExtElem<V>& b);

/// ι_w a with deg w <= deg a. Convention: ι_{e_J} e^I = ε(J, I∖J) e^{I∖J}, i.e. the leading
/// index of J is contracted first, so ι_{x∧y} a = ι_y(ι_x a) and ⟨e^I, e_I⟩ = 1.
Form interior(const Poly& w, const Form& a);
/// ι_a w for a form of degree <= deg w, same convention with the roles of T and T* swapped.
Poly interior(const Form& a, const Poly& w);

/// ⟨a, w⟩ with ⟨e^I, e_J⟩ = δ_IJ on sorted indices.
Rat pairing(const Form& a, const Poly& w);

/// (a⋆w) ∈ gl(T), the matrix with entry (j, i) = ⟨ι_{e_i} a, ι_{e^j} w⟩; deg a = deg w >= 1.
Matrix star(const Form& a, const Poly& w);

/// An element of T* ⊗ Λ^6 T*, stored as the Λ^6-valued coefficient of each e^i.
struct TStarLambda6 {
  std::vector<Form> slots;  // slots[i-1] is the value on e_i
  int dim() const { return static_cast<int>(slots.size()); }
  bool is_zero() const;
  friend bool operator==(const TStarLambda6&, const TStarLambda6&) = default;
};

/// Dual counterpart, an element of T ⊗ Λ^6 T.
struct TLambda6 {
  std::vector<Poly> slots;  // slots[i-1] is the coefficient of e_i
  int dim() const { return static_cast<int>(slots.size()); }
  bool is_zero() const;
  friend bool operator==(const TLambda6&, const TLambda6&) = default;
};

/// (j σ2∧σ5)(Y) = (ι_Y σ2) ∧ σ5.
TStarLambda6 jmap(const Form& sigma2, const Form& sigma5);
/// Mirror of jmap on polyvectors: slot i is (ι_{e^i} w2) ∧ w5.
TLambda6 jmap(const Poly& w2, const Poly& w5);

/// Natural gl(T) action (derivation). A acts on T by A e_j = sum_i A(i,j) e_i and on T* by -A^t.
Form gl_act(const Matrix& a, const Form& f);
Poly gl_act(const Matrix& a, const Poly& p);

extern template class ExtElem<Variance::Covariant>;
extern template class ExtElem<Variance::Contravariant>;

}  // namespace elg
