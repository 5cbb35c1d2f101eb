#include "elg/elgebra.hpp"

#include <sstream>

#include "elg/error.hpp"
#include "elg/exc_algebra.hpp"

namespace elg {

namespace {

std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

Vec column(const Matrix& m, int j) { return m.col(j); }

}  // namespace

// ---------------------------------------------------------------------------------------------
// Elgebra

Elgebra::Elgebra(std::shared_ptr<const DataSet> ds, const std::vector<BracketEntry>& c,
                 const std::optional<Matrix>& d)
    : ds_(std::move(ds)) {
  if (!ds_) throw InputError("elgebra needs a data set");
  int n = ds_->dimE();
  std::vector<Vec> dense(static_cast<std::size_t>(n) * n, Vec(n));
  for (const auto& e : c) {
    if (e.alpha < 1 || e.alpha > n || e.beta < 1 || e.beta > n || e.gamma < 1 || e.gamma > n)
      throw InputError("bracket entry index out of range 1.." + std::to_string(n));
    dense[static_cast<std::size_t>(e.alpha - 1) * n + (e.beta - 1)][e.gamma - 1] += e.value;
  }
  table_.resize(dense.size());
  ad_.assign(n, Matrix(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Vec& v = dense[static_cast<std::size_t>(a) * n + b];
      for (int g = 0; g < n; ++g)
        if (!v[g].is_zero()) {
          table_[static_cast<std::size_t>(a) * n + b].emplace_back(g, v[g]);
          ad_[a](g, b) = v[g];
        }
    }
  D_ = derive_D(*ds_, c);
  if (d && !(*d == D_)) {
    if (d->rows() != D_.rows() || d->cols() != D_.cols())
      throw InputError("D has shape " + std::to_string(d->rows()) + "x" + std::to_string(d->cols()) +
                       ", expected " + std::to_string(D_.rows()) + "x" + std::to_string(D_.cols()));
    throw InputError("stored D differs from the operator determined by the symmetric part of the bracket");
  }
}

std::vector<BracketEntry> Elgebra::entries() const {
  std::vector<BracketEntry> out;
  int n = dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [g, v] : table_[static_cast<std::size_t>(a) * n + b])
        out.push_back({a + 1, b + 1, g + 1, v});
  return out;
}

Vec Elgebra::bracket(const Vec& u, const Vec& v) const {
  int n = dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw InputError("vector length does not match dim E");
  Vec out(n);
  for (int a = 0; a < n; ++a) {
    if (u[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (v[b].is_zero()) continue;
      Rat s = u[a] * v[b];
      for (const auto& [g, c] : table_[static_cast<std::size_t>(a) * n + b]) out[g] += s * c;
    }
  }
  return out;
}

Matrix Elgebra::ad(const Vec& u) const {
  int n = dim();
  Matrix m(n, n);
  for (int a = 0; a < n; ++a)
    if (!u[a].is_zero()) m += u[a] * ad_[a];
  return m;
}

Matrix derive_D(const DataSet& ds, const std::vector<BracketEntry>& c) {
  int d = ds.dimE(), dn = ds.dimN();
  std::vector<Vec> sym_part(static_cast<std::size_t>(d) * d, Vec(d));
  for (const auto& e : c) {
    if (e.alpha < 1 || e.alpha > d || e.beta < 1 || e.beta > d || e.gamma < 1 || e.gamma > d)
      throw InputError("bracket entry index out of range 1.." + std::to_string(d));
    int a = e.alpha - 1, b = e.beta - 1;
    sym_part[static_cast<std::size_t>(std::min(a, b)) * d + std::max(a, b)][e.gamma - 1] += e.value;
  }
  // Diagonal pairs count [e_a, e_a] twice.
  for (int a = 0; a < d; ++a) {
    Vec& v = sym_part[static_cast<std::size_t>(a) * d + a];
    v = Rat(2) * v;
  }
  if (dn == 0) {
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b)
        if (!is_zero(sym_part[static_cast<std::size_t>(a) * d + b]))
          throw InputError("bracket is not antisymmetric on (" + std::to_string(a + 1) + ", " +
                           std::to_string(b + 1) + ") and N = 0");
    return Matrix(d, 0);
  }
  // Rows [ (e_a⊗e_b)_N | [e_a,e_b]+[e_b,e_a] ], solved for Dᵀ.
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(d) * (d + 1) / 2);
  for (int a = 0; a < d; ++a)
    for (int b = a; b < d; ++b) {
      Vec r = ds.sym_to_N(unit_vector(d, a), unit_vector(d, b));
      const Vec& s = sym_part[static_cast<std::size_t>(a) * d + b];
      r.insert(r.end(), s.begin(), s.end());
      rows.push_back(std::move(r));
    }
  Rref red = rref(Matrix::from_rows(rows, dn + d));
  for (int p : red.pivots)
    if (p >= dn) throw InputError("symmetric part of the bracket does not factor through N");
  if (red.rank() != dn) throw InternalError("S²E → N is not surjective for this data set");
  Matrix D(d, dn);
  for (int r = 0; r < red.rank(); ++r)
    for (int g = 0; g < d; ++g) D(g, red.pivots[r]) = red.reduced(r, dn + g);
  return D;
}

// ---------------------------------------------------------------------------------------------
// Verification

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_elgebra(const Elgebra& e) {
  const DataSet& ds = e.dataset();
  int d = e.dim(), dn = ds.dimN();
  const Matrix& D = e.D();
  VerificationReport rep;

  Check leibniz{"leibniz", true, {}};
  for (int a = 0; a < d && leibniz.pass; ++a)
    for (int b = 0; b < d && leibniz.pass; ++b) {
      Matrix lhs = commutator(e.ad(a), e.ad(b));
      Matrix rhs = e.ad(e.bracket(unit_vector(d, a), unit_vector(d, b)));
      if (lhs == rhs) continue;
      Matrix diff = lhs - rhs;
      for (int w = 0; w < d; ++w) {
        Vec col = column(diff, w);
        if (is_zero(col)) continue;
        leibniz.pass = false;
        leibniz.witness = "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ", " +
                          std::to_string(w + 1) + ") jacobiator " + vec_string(col);
        break;
      }
    }
  rep.checks.push_back(leibniz);

  Check sym{"symmetric_part", true, {}};
  for (int a = 0; a < d && sym.pass; ++a)
    for (int b = a; b < d && sym.pass; ++b) {
      Vec ua = unit_vector(d, a), ub = unit_vector(d, b);
      Vec lhs = e.bracket(ua, ub) + e.bracket(ub, ua);
      Vec rhs = dn ? D * ds.sym_to_N(ua, ub) : Vec(d);
      if (lhs != rhs) {
        sym.pass = false;
        sym.witness = "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") residual " +
                      vec_string(lhs - rhs);
      }
    }
  rep.checks.push_back(sym);

  Check member{"ad_in_g", true, {}};
  for (int a = 0; a < d && member.pass; ++a)
    if (!ds.g_span().contains(e.ad(a).flat())) {
      member.pass = false;
      member.witness = "[e_" + std::to_string(a + 1) + ", .] is not in g";
    }
  rep.checks.push_back(member);

  Check lb{"image_D_central", true, {}};
  for (int m = 0; m < dn && lb.pass; ++m) {
    Matrix adm = e.ad(column(D, m));
    if (!adm.is_zero()) {
      for (int u = 0; u < d; ++u) {
        Vec col = column(adm, u);
        if (is_zero(col)) continue;
        lb.pass = false;
        lb.witness = "[D n_" + std::to_string(m + 1) + ", e_" + std::to_string(u + 1) + "] = " + vec_string(col);
        break;
      }
    }
  }
  rep.checks.push_back(lb);

  Check le{"D_equivariant", true, {}};
  if (dn > 0 && member.pass) {
    for (int a = 0; a < d && le.pass; ++a) {
      Matrix lhs = e.ad(a) * D;
      Matrix rhs = D * ds.act_N_matrix(e.ad(a));
      if (lhs == rhs) continue;
      Matrix diff = lhs - rhs;
      for (int m = 0; m < dn; ++m) {
        Vec col = column(diff, m);
        if (is_zero(col)) continue;
        le.pass = false;
        le.witness = "(e_" + std::to_string(a + 1) + ", n_" + std::to_string(m + 1) + ") residual " + vec_string(col);
        break;
      }
    }
  } else if (dn > 0) {
    le.pass = false;
    le.witness = "skipped: ad-operators are not in g";
  }
  rep.checks.push_back(le);
  return rep;
}

Vec jacobiator(const Elgebra& e, const Vec& u, const Vec& v, const Vec& w) {
  return e.bracket(u, e.bracket(v, w)) - e.bracket(e.bracket(u, v), w) - e.bracket(v, e.bracket(u, w));
}

// ---------------------------------------------------------------------------------------------
// Twisted brackets on 𝔨 ⊕ Λ²𝔨* ⊕ Λ⁵𝔨*

namespace {

Poly to_poly(int n, const Vec& x) { return Poly::from_coords(n, 1, x); }

/// Action of X ∈ 𝔨 on E: adjoint on 𝔨, coadjoint on forms.
ExcEVec k_action(const LieAlg& k, const Vec& x, const ExcEVec& u) {
  int n = k.dim();
  ExcEVec out(n);
  out.X = to_poly(n, k.bracket(x, u.X.coords()));
  out.s2 = ad_form(k, x, u.s2);
  out.s5 = ad_form(k, x, u.s5);
  return out;
}

/// The twist as an element of ℝ ⊕ gl ⊕ Λ³ ⊕ Λ⁶ acting on E.
ExcElem twist_element(const Twist& t, const ExcEVec& u) {
  int n = u.n();
  ExcElem a(n);
  Rat s = pairing(t.F1, u.X);
  a.c = s / Rat(3);
  a.A = Rat(-1) * (s / Rat(3)) * Matrix::identity(n);
  a.a3 = interior(u.X, t.F4) - wedge(t.F1, u.s2);
  a.a6 = Rat(-1) * wedge(t.F4, u.s2) - Rat(2) * wedge(t.F1, u.s5);
  return a;
}

ExcEVec twisted_bracket(const LieAlg& k, const Twist& t, const ExcEVec& u, const ExcEVec& v) {
  int n = k.dim();
  Vec x = u.X.coords();
  Form ds2 = ce_differential(k, u.s2);
  Form ds5 = ce_differential(k, u.s5);
  Rat s = pairing(t.F1, u.X);
  ExcEVec out = k_action(k, x, v);
  out.s2 -= interior(v.X, ds2);
  out.s2 += interior(v.X, interior(u.X, t.F4));
  out.s2 += s * v.s2;
  out.s2 -= interior(v.X, wedge(t.F1, u.s2));
  if (n >= 5) {
    out.s5 -= interior(v.X, ds5);
    out.s5 -= wedge(v.s2, ds2);
    out.s5 += wedge(interior(u.X, t.F4), v.s2);
    out.s5 -= interior(v.X, wedge(t.F4, u.s2));
    out.s5 += Rat(2) * s * v.s5;
    out.s5 -= wedge(wedge(t.F1, u.s2), v.s2);
    out.s5 -= Rat(2) * interior(v.X, wedge(t.F1, u.s5));
  }
  return out;
}

void check_twist_shape(const LieAlg& k, const Twist& t) {
  int n = k.dim();
  if (t.F1.dim() != n || t.F1.deg() != 1) throw InputError("F1 must be a 1-form on the Lie algebra");
  if (t.F4.dim() != n || t.F4.deg() != 4) throw InputError("F4 must be a 4-form on the Lie algebra");
}

}  // namespace

Twist zero_twist(int n) { return Twist{Form(n, 1), Form(n, 4)}; }

Elgebra from_lie_twisted(const LieAlg& k, const Twist& t) {
  if (k.dim() < 3 || k.dim() > 6) throw InputError("from-lie needs a Lie algebra of dimension 3..6");
  return from_lie_twisted(k, t, std::make_shared<const DataSet>(build_exceptional(k.dim())));
}

Elgebra from_lie_twisted(const LieAlg& k, const Twist& t, std::shared_ptr<const DataSet> ds) {
  int n = k.dim();
  if (n < 3 || n > 6) throw InputError("from-lie needs a Lie algebra of dimension 3..6");
  if (!ds || ds->family() != Family::Exceptional || ds->n() != n)
    throw InputError("from-lie needs the exceptional data set of the same size");
  check_twist_shape(k, t);
  int d = ds->dimE();
  std::vector<ExcEVec> basis;
  for (int a = 0; a < d; ++a) basis.push_back(exc_evec(n, unit_vector(d, a)));
  std::vector<BracketEntry> c;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec v = coords(twisted_bracket(k, t, basis[a], basis[b]));
      for (int g = 0; g < d; ++g)
        if (!v[g].is_zero()) c.push_back({a + 1, b + 1, g + 1, v[g]});
    }
  Elgebra e(std::move(ds), c);
  e.set_model(LieModel{k, t});
  return e;
}

bool check_twist_integrability(const LieAlg& k, const Twist& t) {
  check_twist_shape(k, t);
  if (!ce_differential(k, t.F1).is_zero()) return false;
  return (ce_differential(k, t.F4) + wedge(t.F1, t.F4)).is_zero();
}

Vec predicted_jacobiator(const LieAlg& k, const Twist& t, const Poly& x, const Poly& y, const Form& s2) {
  int n = k.dim();
  check_twist_shape(k, t);
  ExcEVec out(n);
  Rat s = interior(y, interior(x, ce_differential(k, t.F1))).coeff({});
  out.s2 = s * s2;
  if (n >= 5) {
    Form g = ce_differential(k, t.F4) + wedge(t.F1, t.F4);
    out.s5 = wedge(s2, interior(y, interior(x, g)));
  }
  return coords(out);
}

// ---------------------------------------------------------------------------------------------
// Quotient, subalgebras, parallelisations

namespace {

struct ImageD {
  Rref red;      // rows spanning Im D
  int rank = 0;
};

ImageD image_D(const Elgebra& e) {
  const Matrix& D = e.D();
  ImageD out;
  if (D.cols() == 0) return out;
  out.red = rref(D.transpose());
  out.rank = out.red.rank();
  return out;
}

Vec reduce(const ImageD& im, Vec v) {
  for (int r = 0; r < im.rank; ++r) {
    Rat c = v[im.red.pivots[r]];
    if (c.is_zero()) continue;
    for (int j = 0; j < static_cast<int>(v.size()); ++j) v[j] -= c * im.red.reduced(r, j);
  }
  return v;
}

}  // namespace

Quotient quotient_gE(const Elgebra& e) {
  int d = e.dim();
  const Matrix& D = e.D();
  ImageD im = image_D(e);
  for (int m = 0; m < D.cols(); ++m) {
    Vec dn = column(D, m);
    if (!e.ad(dn).is_zero())
      throw PreconditionError("[Im D, E] is not zero (n_" + std::to_string(m + 1) + ")");
    for (int a = 0; a < d; ++a)
      if (!is_zero(reduce(im, e.bracket(unit_vector(d, a), dn))))
        throw PreconditionError("[E, Im D] is not contained in Im D (e_" + std::to_string(a + 1) + ", n_" +
                                std::to_string(m + 1) + ")");
  }
  std::vector<bool> pivot(d, false);
  for (int r = 0; r < im.rank; ++r) pivot[im.red.pivots[r]] = true;
  Quotient q;
  for (int j = 0; j < d; ++j)
    if (!pivot[j]) q.lifts.push_back(j);
  int qd = static_cast<int>(q.lifts.size());
  q.projection = Matrix(qd, d);
  for (int b = 0; b < d; ++b) {
    Vec r = reduce(im, unit_vector(d, b));
    for (int a = 0; a < qd; ++a) q.projection(a, b) = r[q.lifts[a]];
  }
  std::vector<StructureConstant> sc;
  for (int a = 0; a < qd; ++a)
    for (int b = a + 1; b < qd; ++b) {
      Vec v = q.projection * e.bracket(unit_vector(d, q.lifts[a]), unit_vector(d, q.lifts[b]));
      for (int g = 0; g < qd; ++g)
        if (!v[g].is_zero()) sc.push_back({a + 1, b + 1, g + 1, v[g]});
    }
  q.algebra = LieAlg(qd, sc);
  return q;
}

std::optional<std::pair<int, int>> subalgebra_failure(const Elgebra& e, const Subspace& v) {
  if (v.ambient() != Ambient::E) throw InputError("subalgebra test needs a subspace of E");
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!v.contains(e.bracket(b[i], b[j]))) return std::make_pair(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  return std::nullopt;
}

bool ParallelisationCertificate::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

ParallelisationCertificate check_parallelisation(const Elgebra& e, const Subspace& v) {
  if (v.ambient() != Ambient::E) throw InputError("parallelisation needs a subspace of E");
  if (v.dataset().fingerprint() != e.dataset().fingerprint())
    throw InputError("subspace and elgebra use different data sets");
  ParallelisationCertificate cert;
  auto fail = subalgebra_failure(e, v);
  cert.checks.push_back({"subalgebra", !fail,
                         fail ? "[v_" + std::to_string(fail->first) + ", v_" + std::to_string(fail->second) +
                                    "] leaves V"
                              : std::string{}});
  auto col = is_colagrangian(v);
  cert.checks.push_back({"colagrangian", col.value, col.value ? std::string{} : "V is not co-Lagrangian"});
  int n = e.dataset().n();
  cert.checks.push_back({"codimension", v.codim() == n,
                         v.codim() == n ? std::string{}
                                        : "codim V = " + std::to_string(v.codim()) + ", expected " + std::to_string(n)});
  Check img{"image_D_in_V", true, {}};
  for (int m = 0; m < e.D().cols(); ++m)
    if (!v.contains(column(e.D(), m))) {
      img.pass = false;
      img.witness = "D n_" + std::to_string(m + 1) + " is not in V";
      break;
    }
  cert.checks.push_back(img);
  int r = image_D(e).rank;
  cert.dim_gE = e.dim() - r;
  cert.dim_gV = img.pass ? v.dim() - r : 0;
  return cert;
}

DualityCertificate duality_pair(const Elgebra& e, const Subspace& v1, const Subspace& v2) {
  DualityCertificate out;
  out.first = check_parallelisation(e, v1);
  out.second = check_parallelisation(e, v2);
  out.pass = out.first.pass() && out.second.pass();
  if (out.pass) {
    int r = image_D(e).rank;
    int both = v1.dim() + v2.dim() - (v1 + v2).dim();
    out.intersection_dim = both - r;
    out.trivial_intersection = out.intersection_dim == 0;
  }
  return out;
}

// ---------------------------------------------------------------------------------------------
// Coordinate bracket identity

IdentityResult coordinate_bracket_identity(const Elgebra& e) {
  IdentityResult res;
  const DataSet& ds = e.dataset();
  int d = e.dim();
  if (!e.model()) {
    res.mode = "adjoint";
    for (int a = 0; a < d; ++a) {
      // π is the identity on 𝔤 = π(End E), so membership is the whole content here.
      if (!ds.g_span().contains(e.ad(a).flat())) {
        res.pass = false;
        res.witness = "[e_" + std::to_string(a + 1) + ", .] is not in g";
        return res;
      }
    }
    return res;
  }
  res.mode = "lie_model";
  const LieAlg& k = e.model()->k;
  const Twist& t = e.model()->twist;
  int n = k.dim();
  std::vector<ExcEVec> basis;
  for (int a = 0; a < d; ++a) basis.push_back(exc_evec(n, unit_vector(d, a)));
  // In exponential coordinates the left-invariant frame is E_A(x) = e_A + ½ x^m ad_{e_m} e_A + O(x²).
  for (int a = 0; a < d; ++a) {
    const ExcEVec& u = basis[a];
    Vec x = u.X.coords();
    std::vector<Vec> cols;
    for (int w = 0; w < d; ++w)
      cols.push_back(coords(k_action(k, basis[w].X.coords(), u)));
    Matrix theta = Rat(1, 2) * Matrix::from_columns(cols, d);
    Matrix pt = ds.pi(theta);
    Matrix tw = act_E_matrix(twist_element(t, u));
    for (int b = 0; b < d; ++b) {
      Vec rho = Rat(1, 2) * coords(k_action(k, x, basis[b]));
      Vec expected = rho - pt * unit_vector(d, b) + tw * unit_vector(d, b);
      Vec actual = e.bracket(unit_vector(d, a), unit_vector(d, b));
      if (expected != actual) {
        res.pass = false;
        res.witness = "(" + std::to_string(a + 1) + ", " + std::to_string(b + 1) + ") residual " +
                      vec_string(actual - expected);
        return res;
      }
    }
  }
  return res;
}

}  // namespace elg
