#include "elg/matrix.hpp"

#include "elg/error.hpp"

namespace elg {

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r) x *= s;
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Rat r;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  return r;
}

Vec unit_vector(int len, int i) {
  Vec v(len);
  v[i] = 1;
  return v;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(int rows, int cols, int i, int j) {
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw InputError("row length mismatch");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw InputError("column length mismatch");
    for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_flat(int rows, int cols, const Vec& flat) {
  if (static_cast<int>(flat.size()) != rows * cols) throw InputError("flat matrix size mismatch");
  Matrix m(rows, cols);
  m.data_ = flat;
  return m;
}

Vec Matrix::row(int i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
             data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rat Matrix::trace() const {
  Rat t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Rat& s, Matrix m) {
  for (auto& x : m.data_)
    if (!x.is_zero()) x *= s;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != static_cast<int>(v.size())) throw InputError("matrix-vector shape mismatch");
  Vec r(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j)
      if (!v[j].is_zero() && !a(i, j).is_zero()) r[i] += a(i, j) * v[j];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rref rref(const Matrix& m) {
  Matrix a = m;
  Rref out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!a(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Rat inv = Rat(1) / a(row, col);
    for (int j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Rat f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = Matrix(row, a.cols());
  for (int i = 0; i < row; ++i)
    for (int j = 0; j < a.cols(); ++j) out.reduced(i, j) = a(i, j);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (int i = 0; i < r.rank(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.rank() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw InputError("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (r.rank() > 0 && r.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (int i = 0; i < r.rank(); ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

Matrix exp_nilpotent(const Matrix& m) {
  int n = m.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= n + 1; ++k) {
    term = Rat(1, k) * (term * m);
    if (term.is_zero()) return result;
    result += term;
  }
  throw InternalError("exp_nilpotent: matrix is not nilpotent");
}

SpanSolver::SpanSolver(const std::vector<Vec>& generators, int length)
    : length_(length), generator_count_(static_cast<int>(generators.size())) {
  for (int g = 0; g < generator_count_; ++g) {
    if (static_cast<int>(generators[g].size()) != length) throw InputError("SpanSolver: generator length mismatch");
    Vec v = generators[g];
    Vec t(generator_count_);
    t[g] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (int j : nnz_[r]) v[j] -= f * rows_[r][j];
      for (int i = 0; i < generator_count_; ++i)
        if (!transform_[r][i].is_zero()) t[i] -= f * transform_[r][i];
    }
    int piv = -1;
    for (int j = 0; j < length; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Rat inv = Rat(1) / v[piv];
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (auto& x : t)
      if (!x.is_zero()) x *= inv;
    std::vector<int> nz;
    for (int j = 0; j < length; ++j)
      if (!v[j].is_zero()) nz.push_back(j);
    // Keep earlier rows reduced with respect to the new pivot.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      Rat f = rows_[r][piv];
      if (f.is_zero()) continue;
      for (int j : nz) rows_[r][j] -= f * v[j];
      for (int i = 0; i < generator_count_; ++i)
        if (!t[i].is_zero()) transform_[r][i] -= f * t[i];
      nnz_[r].clear();
      for (int j = 0; j < length; ++j)
        if (!rows_[r][j].is_zero()) nnz_[r].push_back(j);
    }
    rows_.push_back(std::move(v));
    nnz_.push_back(std::move(nz));
    pivots_.push_back(piv);
    transform_.push_back(std::move(t));
  }
}

Vec SpanSolver::residual(const Vec& v) const {
  if (static_cast<int>(v.size()) != length_) throw InputError("SpanSolver: vector length mismatch");
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rat f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (int j : nnz_[k]) r[j] -= f * rows_[k][j];
  }
  return r;
}

std::optional<Vec> SpanSolver::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(generator_count_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rat& f = v[pivots_[k]];
    if (f.is_zero()) continue;
    for (int i = 0; i < generator_count_; ++i)
      if (!transform_[k][i].is_zero()) c[i] += f * transform_[k][i];
  }
  return c;
}

}  // namespace elg
