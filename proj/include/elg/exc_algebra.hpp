#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elg/exterior.hpp"
#include "elg/matrix.hpp"

namespace elg {

class DataSet;

/// Element of e_{n(n)} ⊕ R in its gl(T) grading: R ⊕ gl(T) ⊕ Λ³T* ⊕ Λ⁶T* ⊕ Λ³T ⊕ Λ⁶T.
struct ExcElem {
  int n = 0;
  Rat c;        // central R
  Matrix A;     // gl(T)
  Form a3, a6;  // Λ³T*, Λ⁶T*
  Poly w3, w6;  // Λ³T, Λ⁶T

  explicit ExcElem(int n = 0);

  static ExcElem central(int n, const Rat& c);
  static ExcElem gl(const Matrix& a);
  static ExcElem from(const Form& a);  // a3 or a6 by degree
  static ExcElem from(const Poly& w);  // w3 or w6 by degree

  bool is_zero() const;
  ExcElem& operator+=(const ExcElem& o);
  ExcElem& operator-=(const ExcElem& o);
  friend ExcElem operator+(ExcElem a, const ExcElem& b) { return a += b; }
  friend ExcElem operator-(ExcElem a, const ExcElem& b) { return a -= b; }
  friend ExcElem operator*(const Rat& s, ExcElem a);
  ExcElem operator-() const { return Rat(-1) * *this; }
  friend bool operator==(const ExcElem&, const ExcElem&) = default;
};

/// Which graded piece an element lives in, if it lives in exactly one.
enum class Piece { Zero, Central, Gl, A3, A6, W3, W6, Mixed };
Piece piece_of(const ExcElem& x);
std::string to_string(Piece p);

/// 1 + n² + 2·C(n,3) + 2·C(n,6).
int exc_algebra_dim(int n);
/// Basis ordered as: central, gl units (row-major), Λ³T*, Λ⁶T*, Λ³T, Λ⁶T (lexicographic indices).
std::vector<ExcElem> exc_basis(int n);
Vec exc_coords(const ExcElem& x);
ExcElem exc_from_coords(int n, const Vec& v);

ExcElem exc_bracket(const ExcElem& x, const ExcElem& y);

/// Sets the central component to tr(A)/(9-n), landing in the e_{n(n)} summand.
ExcElem embed_e_n(const ExcElem& x);

/// u = X + σ₂ + σ₅ ∈ E = T ⊕ Λ²T* ⊕ Λ⁵T*.
struct ExcEVec {
  Poly X;
  Form s2, s5;
  explicit ExcEVec(int n = 0);
  int n() const { return X.dim(); }
  bool is_zero() const { return X.is_zero() && s2.is_zero() && s5.is_zero(); }
  friend bool operator==(const ExcEVec&, const ExcEVec&) = default;
};

/// ξ = α + w₂ + w₅ ∈ E* = T* ⊕ Λ²T ⊕ Λ⁵T.
struct ExcEDual {
  Form alpha;
  Poly w2, w5;
  explicit ExcEDual(int n = 0);
  friend bool operator==(const ExcEDual&, const ExcEDual&) = default;
};

/// N = T* ⊕ Λ⁴T* ⊕ (T* ⊗ Λ⁶T*).
struct ExcNVec {
  Form n1, n4;
  TStarLambda6 n7;
  explicit ExcNVec(int n = 0);
  bool is_zero() const { return n1.is_zero() && n4.is_zero() && n7.is_zero(); }
  friend bool operator==(const ExcNVec&, const ExcNVec&) = default;
};

/// N* = T ⊕ Λ⁴T ⊕ (T ⊗ Λ⁶T).
struct ExcNDual {
  Poly m1, m4;
  TLambda6 m7;
  explicit ExcNDual(int n = 0);
  bool is_zero() const { return m1.is_zero() && m4.is_zero() && m7.is_zero(); }
  friend bool operator==(const ExcNDual&, const ExcNDual&) = default;
};

int exc_dimE(int n);
int exc_dimN(int n);
Vec coords(const ExcEVec& u);
Vec coords(const ExcEDual& u);
Vec coords(const ExcNVec& m);
Vec coords(const ExcNDual& m);
ExcEVec exc_evec(int n, const Vec& v);
ExcEDual exc_edual(int n, const Vec& v);
ExcNVec exc_nvec(int n, const Vec& v);
ExcNDual exc_ndual(int n, const Vec& v);

/// Polarization of u⊗u ↦ 2ι_Xσ₂ + (2ι_Xσ₅ − σ₂∧σ₂) + 2 jσ₂∧σ₅.
ExcNVec exc_sym_to_N(const ExcEVec& u, const ExcEVec& v);
/// The same formula with T and T* exchanged, coefficient 1.
ExcNDual exc_sym_to_Nstar(const ExcEDual& xi, const ExcEDual& eta);

ExcEVec act_E(const ExcElem& x, const ExcEVec& u);
/// Matrix of act_E(x, ·) in E coordinates.
Matrix act_E_matrix(const ExcElem& x);
/// Action on N induced from S²E through the data set's projection (ℝ acts with weight 2).
ExcNVec act_N(const DataSet& ds, const ExcElem& x, const ExcNVec& m);

/// e^{gen}·u for a nilpotent generator (a single piece among Λ³T*, Λ⁶T*, Λ³T, Λ⁶T, or a
/// nilpotent gl(T) element).
ExcEVec exp_nilpotent(const ExcElem& gen, const ExcEVec& u);
bool is_nilpotent_generator(const ExcElem& x);

struct AlgebraCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // first failure, empty on success
};

struct AlgebraReport {
  int n = 0;
  int dimension = 0;
  int expected_dimension = 0;
  std::vector<AlgebraCheck> checks;
  bool pass() const;
};

/// Jacobi identity, representation property of act_E, dimension count, faithfulness, closure of
/// the e_{n(n)} embedding, and equivariance of the S²E → N projection, all over full bases.
AlgebraReport verify_algebra(int n);

}  // namespace elg
