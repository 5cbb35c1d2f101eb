#pragma once

#include <optional>
#include <vector>

#include "elg/rat.hpp"

namespace elg {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec unit_vector(int len, int i);

/// Dense row-major matrix over Rat.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix unit(int rows, int cols, int i, int j);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  /// Row-major flattening, used to treat End(E) as a vector space.
  const std::vector<Rat>& flat() const { return data_; }
  static Matrix from_flat(int rows, int cols, const Vec& flat);

  Matrix transpose() const;
  Rat trace() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rat& s, Matrix m);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix reduced;           // reduced row-echelon form, zero rows removed
  std::vector<int> pivots;  // pivot column of each row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(const Matrix& m);
int rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// exp(m) for nilpotent m; throws InternalError if m^k does not vanish for k <= size.
Matrix exp_nilpotent(const Matrix& m);

/// Membership and coordinates in the span of a fixed list of generator vectors.
class SpanSolver {
 public:
  SpanSolver() = default;
  SpanSolver(const std::vector<Vec>& generators, int length);

  int rank() const { return static_cast<int>(pivots_.size()); }
  int length() const { return length_; }
  int generator_count() const { return generator_count_; }
  bool independent() const { return rank() == generator_count_; }

  /// v minus its reduction against the span; zero iff v is in the span.
  Vec residual(const Vec& v) const;
  bool contains(const Vec& v) const { return elg::is_zero(residual(v)); }
  /// Coefficients c with sum_i c_i generators[i] = v, if v is in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  int length_ = 0;
  int generator_count_ = 0;
  std::vector<Vec> rows_;                // reduced rows
  std::vector<std::vector<int>> nnz_;    // nonzero columns of each reduced row
  std::vector<int> pivots_;
  std::vector<Vec> transform_;           // rows_[r] = sum_i transform_[r][i] generators[i]
};

}  // namespace elg
