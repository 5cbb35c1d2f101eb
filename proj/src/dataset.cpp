#include "elg/dataset.hpp"

#include <map>
#include <sstream>

#include "elg/exc_algebra.hpp"
#include "elg/exterior.hpp"

namespace elg {

std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "gl";
    case Family::Opq: return "opq";
    case Family::Exceptional: return "exc";
    case Family::SLwedge2: return "slwedge2";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "gl") return Family::GL;
  if (s == "opq") return Family::Opq;
  if (s == "exc" || s == "exceptional") return Family::Exceptional;
  if (s == "slwedge2") return Family::SLwedge2;
  throw InputError("unknown family '" + s + "' (expected gl, opq, exc or slwedge2)");
}

namespace {

DataSet::Sparse to_sparse(const Vec& v) {
  DataSet::Sparse s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

template <class F>
std::vector<DataSet::Sparse> bilinear_table(int d, F f) {
  std::vector<DataSet::Sparse> t(static_cast<std::size_t>(d) * d);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      auto s = to_sparse(f(a, b));
      t[static_cast<std::size_t>(a) * d + b] = s;
      t[static_cast<std::size_t>(b) * d + a] = std::move(s);
    }
  return t;
}

void check_len(const Vec& v, int len, const char* what) {
  if (static_cast<int>(v.size()) != len) throw InputError(std::string(what) + ": vector does not belong to the data set");
}

}  // namespace

void DataSet::set_g_basis(std::vector<Matrix> g) {
  for (const auto& m : g)
    if (m.rows() != dimE_ || m.cols() != dimE_) throw InputError("g_basis matrix has wrong size");
  g_basis_ = std::move(g);
  std::vector<Vec> flats;
  flats.reserve(g_basis_.size());
  for (const auto& m : g_basis_) flats.push_back(m.flat());
  g_span_ = SpanSolver(flats, dimE_ * dimE_);
}

std::string DataSet::fingerprint() const {
  std::ostringstream os;
  os << to_string(family_);
  if (family_ == Family::Opq) os << " p=" << p_ << " q=" << q_;
  else os << " n=" << n_;
  os << " dimE=" << dimE_ << " dimN=" << dimN_ << " scale=" << embed_scale_ << " g=" << g_basis_.size();
  return os.str();
}

Vec DataSet::sym_to_N(const Vec& u, const Vec& v) const {
  check_len(u, dimE_, "sym_to_N");
  check_len(v, dimE_, "sym_to_N");
  Vec r(dimN_);
  for (int a = 0; a < dimE_; ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < dimE_; ++b) {
      if (v[b].is_zero()) continue;
      Rat uv = u[a] * v[b];
      for (const auto& [m, c] : sym_[static_cast<std::size_t>(a) * dimE_ + b]) r[m] += uv * c;
    }
  }
  return r;
}

Vec DataSet::sym_to_Nstar(const Vec& xi, const Vec& eta) const {
  check_len(xi, dimE_, "sym_to_Nstar");
  check_len(eta, dimE_, "sym_to_Nstar");
  Vec r(dimN_);
  for (int a = 0; a < dimE_; ++a) {
    if (xi[a].is_zero()) continue;
    for (int b = 0; b < dimE_; ++b) {
      if (eta[b].is_zero()) continue;
      Rat uv = xi[a] * eta[b];
      for (const auto& [m, c] : symstar_[static_cast<std::size_t>(a) * dimE_ + b]) r[m] += uv * c;
    }
  }
  return r;
}

Vec DataSet::sym_to_N(const Matrix& t) const {
  if (t.rows() != dimE_ || t.cols() != dimE_) throw InputError("sym_to_N: tensor has wrong size");
  Vec r(dimN_);
  for (int a = 0; a < dimE_; ++a)
    for (int b = 0; b < dimE_; ++b) {
      if (t(a, b).is_zero()) continue;
      for (const auto& [m, c] : sym_[static_cast<std::size_t>(a) * dimE_ + b]) r[m] += t(a, b) * c;
    }
  return r;
}

Matrix DataSet::N_to_sym(const Vec& m) const {
  check_len(m, dimN_, "N_to_sym");
  Matrix s(dimE_, dimE_);
  for (int k = 0; k < dimN_; ++k) {
    if (m[k].is_zero()) continue;
    for (const auto& [a, b, c] : section_[k]) s(a, b) += m[k] * c;
  }
  return embed_scale_ * s;
}

Vec DataSet::xiN_to_E(const Vec& xi, const Vec& m) const {
  check_len(xi, dimE_, "xiN_to_E");
  check_len(m, dimN_, "xiN_to_E");
  Vec r(dimE_);
  for (int k = 0; k < dimN_; ++k) {
    if (m[k].is_zero()) continue;
    for (const auto& [a, b, c] : section_[k])
      if (!xi[a].is_zero()) r[b] += xi[a] * m[k] * c;
  }
  return embed_scale_ * r;
}

Matrix DataSet::pi_prime_unit(const Matrix& a) const {
  if (a.rows() != dimE_ || a.cols() != dimE_) throw InputError("pi_prime: matrix has wrong size");
  Matrix r(dimE_, dimE_);
  for (int k = 0; k < dimE_; ++k)
    for (int j = 0; j < dimE_; ++j) {
      if (a(k, j).is_zero()) continue;
      for (const auto& [i, l, c] : pprime_[static_cast<std::size_t>(k) * dimE_ + j]) r(i, l) += a(k, j) * c;
    }
  return r;
}

Vec DataSet::act_N(const Matrix& x, const Vec& m) const {
  if (x.rows() != dimE_ || x.cols() != dimE_) throw InputError("act_N: matrix has wrong size");
  check_len(m, dimN_, "act_N");
  // t = X s + s Xᵗ is symmetric, so its image is twice that of X s.
  Vec r(dimN_);
  for (int k = 0; k < dimN_; ++k) {
    if (m[k].is_zero()) continue;
    for (const auto& [c, b, sv] : section_[k])
      for (int a = 0; a < dimE_; ++a) {
        if (x(a, c).is_zero()) continue;
        Rat f = Rat(2) * m[k] * x(a, c) * sv;
        for (const auto& [l, coef] : sym_[static_cast<std::size_t>(a) * dimE_ + b]) r[l] += f * coef;
      }
  }
  return r;
}

Matrix DataSet::act_N_matrix(const Matrix& x) const {
  std::vector<Vec> cols;
  for (int k = 0; k < dimN_; ++k) cols.push_back(act_N(x, unit_vector(dimN_, k)));
  return Matrix::from_columns(cols, dimN_);
}

std::optional<std::string> DataSet::equivariance_failure() const {
  if (dimN_ == 0) return std::nullopt;
  for (std::size_t g = 0; g < g_basis_.size(); ++g) {
    const Matrix& x = g_basis_[g];
    Matrix xn = act_N_matrix(x);
    for (int a = 0; a < dimE_; ++a) {
      Vec ea = unit_vector(dimE_, a), xa = x.col(a);
      for (int b = a; b < dimE_; ++b) {
        Vec eb = unit_vector(dimE_, b), xb = x.col(b);
        Vec lhs = sym_to_N(xa, eb) + sym_to_N(ea, xb);
        Vec rhs = xn * sym_to_N(ea, eb);
        if (lhs != rhs)
          return "generator " + std::to_string(g + 1) + " on basis pair (" + std::to_string(a + 1) + ", " +
                 std::to_string(b + 1) + ")";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> DataSet::closure_failure() const {
  if (!g_span_.independent()) return "g_basis is linearly dependent";
  for (std::size_t i = 0; i < g_basis_.size(); ++i)
    for (std::size_t j = i + 1; j < g_basis_.size(); ++j)
      if (!g_span_.contains(commutator(g_basis_[i], g_basis_[j]).flat()))
        return "commutator of generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
               " leaves the span";
  return std::nullopt;
}

void DataSet::finish() {
  std::size_t d = dimE_;
  by_m_.assign(dimN_, {});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [m, c] : sym_[a * d + b]) by_m_[m].emplace_back(a, b, c);

  // The transpose of sym_to_Nstar maps N into S²E; composing with sym_to_N gives L, and
  // T∘L⁻¹ is the section with image T(N).
  std::vector<Entries> t(dimN_);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [m, c] : symstar_[a * d + b]) t[m].emplace_back(a, b, c);
  Matrix L(dimN_, dimN_);
  for (int m = 0; m < dimN_; ++m)
    for (const auto& [a, b, c] : t[m])
      for (const auto& [k, s] : sym_[a * d + b]) L(k, m) += c * s;
  section_.assign(dimN_, {});
  if (dimN_ > 0) {
    auto inv = inverse(L);
    if (!inv) throw InternalError("sym_to_N is not surjective on the dual image");
    for (int m = 0; m < dimN_; ++m) {
      std::map<std::pair<int, int>, Rat> acc;
      for (int k = 0; k < dimN_; ++k) {
        const Rat& f = (*inv)(k, m);
        if (f.is_zero()) continue;
        for (const auto& [a, b, c] : t[k]) acc[{a, b}] += f * c;
      }
      for (const auto& [ab, c] : acc)
        if (!c.is_zero()) section_[m].emplace_back(ab.first, ab.second, c);
    }
  }

  // π′₁(E_kj)^i_l = Σ_m s_m^{ij} S^m_{kl}
  std::vector<std::map<std::pair<int, int>, Rat>> acc(d * d);
  for (int m = 0; m < dimN_; ++m)
    for (const auto& [i, j, s] : section_[m])
      for (const auto& [k, l, S] : by_m_[m]) acc[static_cast<std::size_t>(k) * d + j][{i, l}] += s * S;
  pprime_.assign(d * d, {});
  for (std::size_t u = 0; u < d * d; ++u)
    for (const auto& [il, c] : acc[u])
      if (!c.is_zero()) pprime_[u].emplace_back(il.first, il.second, c);

  set_g_basis(std::move(g_basis_));
}

namespace {

std::vector<Matrix> all_units(int n) {
  std::vector<Matrix> g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.push_back(Matrix::unit(n, n, i, j));
  return g;
}

}  // namespace

DataSet build_opq(int p, int q) {
  if (p < 1 || q < 1) throw InputError("O(p,q) data set needs p, q >= 1");
  DataSet ds;
  ds.family_ = Family::Opq;
  ds.p_ = p;
  ds.q_ = q;
  ds.n_ = p == q ? p : p + q;
  int d = p + q;
  ds.dimE_ = d;
  ds.dimN_ = 1;
  ds.eta_ = Matrix(d, d);
  for (int i = 0; i < d; ++i) ds.eta_(i, i) = i < p ? 1 : -1;
  auto metric = [&](int a, int b) { return Vec{ds.eta_(a, b)}; };
  ds.sym_ = bilinear_table(d, metric);
  ds.symstar_ = bilinear_table(d, metric);  // η⁻¹ = η in this basis
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix s = Matrix::unit(d, d, i, j) - Matrix::unit(d, d, j, i);
      ds.g_basis_.push_back(ds.eta_ * s);
    }
  ds.finish();
  calibrate(ds);
  return ds;
}

DataSet build_exceptional(int n) {
  if (n < 2 || n > 6) throw InputError("exceptional data set needs 2 <= n <= 6 (3..6 public)");
  DataSet ds;
  ds.family_ = Family::Exceptional;
  ds.n_ = n;
  ds.dimE_ = exc_dimE(n);
  ds.dimN_ = exc_dimN(n);
  int d = ds.dimE_;
  std::vector<ExcEVec> eb;
  std::vector<ExcEDual> db;
  for (int a = 0; a < d; ++a) {
    eb.push_back(exc_evec(n, unit_vector(d, a)));
    db.push_back(exc_edual(n, unit_vector(d, a)));
  }
  ds.sym_ = bilinear_table(d, [&](int a, int b) { return coords(exc_sym_to_N(eb[a], eb[b])); });
  ds.symstar_ = bilinear_table(d, [&](int a, int b) { return coords(exc_sym_to_Nstar(db[a], db[b])); });
  for (const auto& x : exc_basis(n)) ds.g_basis_.push_back(act_E_matrix(x));
  ds.finish();
  calibrate(ds);
  return ds;
}

namespace {

DataSet::Sparse wedge_coords(int dim, const MultiIndex& a, const MultiIndex& b) {
  auto w = wedge(Poly::basis(dim, a), Poly::basis(dim, b));
  return to_sparse(w.coords());
}

}  // namespace

DataSet build_dataset(Family family, int n) {
  switch (family) {
    case Family::GL: {
      if (n < 1) throw InputError("GL(n) data set needs n >= 1");
      DataSet ds;
      ds.family_ = Family::GL;
      ds.n_ = n;
      ds.dimE_ = n;
      ds.dimN_ = 0;
      ds.sym_.assign(static_cast<std::size_t>(n) * n, {});
      ds.symstar_ = ds.sym_;
      ds.g_basis_ = all_units(n);
      ds.finish();
      calibrate(ds);
      return ds;
    }
    case Family::Opq:
      return build_opq(n, n);
    case Family::Exceptional:
      if (n < 3 || n > 6) throw InputError("exceptional data set is supported for n = 3..6");
      return build_exceptional(n);
    case Family::SLwedge2: {
      if (n < 2) throw InputError("SL(n+1) data set needs n >= 2");
      DataSet ds;
      ds.family_ = Family::SLwedge2;
      ds.n_ = n;
      int w = n + 1;
      auto pairs = combinations(w, 2);
      ds.dimE_ = static_cast<int>(pairs.size());
      ds.dimN_ = binomial(w, 4);
      int d = ds.dimE_;
      // Forms and polyvectors share the same wedge coefficients in dual bases.
      ds.sym_ = bilinear_table(d, [&](int a, int b) {
        Vec v(ds.dimN_);
        for (const auto& [m, c] : wedge_coords(w, pairs[a], pairs[b])) v[m] = c;
        return v;
      });
      ds.symstar_ = ds.sym_;
      auto induced = [&](const Matrix& m) {
        std::vector<Vec> cols;
        for (const auto& pr : pairs) cols.push_back(gl_act(m, Poly::basis(w, pr)).coords());
        return Matrix::from_columns(cols, d);
      };
      for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j)
          if (i != j) ds.g_basis_.push_back(induced(Matrix::unit(w, w, i, j)));
      for (int i = 0; i + 1 < w; ++i)
        ds.g_basis_.push_back(induced(Matrix::unit(w, w, i, i) - Matrix::unit(w, w, i + 1, i + 1)));
      ds.g_basis_.push_back(induced(Matrix::identity(w)));
      ds.finish();
      calibrate(ds);
      return ds;
    }
  }
  throw InputError("unsupported family");
}

Rat calibrate(DataSet& ds) {
  int d = ds.dimE();
  const SpanSolver& span = ds.g_span();
  std::optional<Rat> c;
  bool any_b = false;
  std::vector<std::pair<Vec, Vec>> res;
  res.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      Matrix a = Matrix::unit(d, d, k, j);
      Vec ra = span.residual(a.flat());
      Vec rb = span.residual(ds.pi_prime_unit(a).flat());
      if (!c)
        for (int t = 0; t < d * d; ++t)
          if (!rb[t].is_zero()) {
            c = ra[t] / rb[t];
            break;
          }
      any_b = any_b || !is_zero(rb);
      res.emplace_back(std::move(ra), std::move(rb));
    }
  if (!any_b) {
    // π′₁(End E) ⊂ 𝔤: every scale works iff 𝔤 = End(E) modulo π′₁, which is the N = 0 situation.
    for (int u = 0; u < d * d; ++u)
      if (!is_zero(res[u].first))
        throw CalibrationError(CalibrationError::Kind::NotAdmissible,
                               "no embedding scale makes the data set admissible (matrix unit (" +
                                   std::to_string(u / d + 1) + ", " + std::to_string(u % d + 1) + "))");
    if (ds.dimN() > 0)
      throw CalibrationError(CalibrationError::Kind::NonUnique, "embedding scale is not determined by admissibility");
    ds.set_embed_scale(1);
    return Rat(1);
  }
  for (int u = 0; u < d * d; ++u)
    if (res[u].first != *c * res[u].second)
      throw CalibrationError(CalibrationError::Kind::NotAdmissible,
                             "no embedding scale makes the data set admissible (matrix unit (" +
                                 std::to_string(u / d + 1) + ", " + std::to_string(u % d + 1) + "))");
  ds.set_embed_scale(*c);
  return *c;
}

AdmissibilityCertificate check_admissible(const DataSet& ds) {
  AdmissibilityCertificate cert;
  int d = ds.dimE();
  cert.coords.resize(static_cast<std::size_t>(d) * d);
  bool eta_ok = true;
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      Matrix p = ds.pi(Matrix::unit(d, d, k, j));
      if (ds.family() == Family::Opq) {
        const Matrix& eta = ds.eta();
        if (!(p.transpose() * eta + eta * p).is_zero()) eta_ok = false;
      }
      auto co = ds.g_span().coordinates(p.flat());
      if (!co) {
        if (cert.pass) {
          cert.pass = false;
          cert.witness = std::make_pair(k + 1, j + 1);
          cert.residual = ds.g_span().residual(p.flat());
        }
        continue;
      }
      cert.coords[static_cast<std::size_t>(k) * d + j] = std::move(*co);
    }
  if (ds.family() == Family::Opq) {
    cert.eta_antisymmetric = eta_ok;
    if (!eta_ok) cert.pass = false;
  }
  return cert;
}

}  // namespace elg
