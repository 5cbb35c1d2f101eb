#include "elg/subspace.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "elg/error.hpp"

namespace elg {

std::string to_string(Ambient a) { return a == Ambient::E ? "E" : "Edual"; }

std::string to_string(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::DimN: return "dim_n";
    case OrbitLabel::DimNMinus1: return "dim_n_minus_1";
    case OrbitLabel::NotLagrangian: return "not_lagrangian";
  }
  return "?";
}

namespace {

std::vector<Vec> rref_rows(const std::vector<Vec>& gens, int d) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != d) throw InputError("subspace generator has wrong length");
  if (gens.empty()) return {};
  Rref r = rref(Matrix::from_rows(gens, d));
  std::vector<Vec> rows;
  for (int i = 0; i < r.rank(); ++i) rows.push_back(r.reduced.row(i));
  return rows;
}

Matrix rows_matrix(const std::vector<Vec>& rows, int d) { return Matrix::from_rows(rows, d); }

}  // namespace

Subspace::Subspace(std::shared_ptr<const DataSet> ds, Ambient ambient, const std::vector<Vec>& generators)
    : ds_(std::move(ds)), ambient_(ambient) {
  if (!ds_) throw InputError("subspace without a data set");
  rows_ = rref_rows(generators, ds_->dimE());
}

Subspace Subspace::whole(std::shared_ptr<const DataSet> ds, Ambient ambient) {
  int d = ds->dimE();
  std::vector<Vec> g;
  for (int i = 0; i < d; ++i) g.push_back(unit_vector(d, i));
  return Subspace(std::move(ds), ambient, g);
}

Subspace Subspace::zero(std::shared_ptr<const DataSet> ds, Ambient ambient) {
  return Subspace(std::move(ds), ambient, {});
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) throw InputError("vector has wrong length for this subspace");
  // Reduce against the RREF rows.
  Vec r = v;
  for (const auto& row : rows_) {
    int piv = 0;
    while (row[piv].is_zero()) ++piv;
    if (r[piv].is_zero()) continue;
    Rat f = r[piv];
    for (int j = piv; j < ambient_dim(); ++j)
      if (!row[j].is_zero()) r[j] -= f * row[j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) return false;
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw InputError("sum of subspaces in different ambient spaces");
  std::vector<Vec> g = rows_;
  g.insert(g.end(), o.rows_.begin(), o.rows_.end());
  return Subspace(ds_, ambient_, g);
}

Subspace Subspace::transformed(const Matrix& g) const {
  std::vector<Vec> out;
  for (const auto& r : rows_) out.push_back(g * r);
  return Subspace(ds_, ambient_, out);
}

Subspace annihilator(const Subspace& v) {
  Ambient other = v.ambient() == Ambient::E ? Ambient::EDual : Ambient::E;
  auto ker = nullspace(rows_matrix(v.basis(), v.ambient_dim()));
  return Subspace(v.dataset_ptr(), other, ker);
}

bool is_isotropic(const Subspace& v) {
  const DataSet& ds = v.dataset();
  const auto& b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      Vec m = v.ambient() == Ambient::E ? ds.sym_to_N(b[i], b[j]) : ds.sym_to_Nstar(b[i], b[j]);
      if (!is_zero(m)) return false;
    }
  return true;
}

Subspace xiN_span(const Subspace& v) {
  if (v.ambient() != Ambient::E) throw InputError("(V°⊗N)_E is defined for subspaces of E");
  const DataSet& ds = v.dataset();
  Subspace ann = annihilator(v);
  std::vector<Vec> g;
  for (const auto& xi : ann.basis())
    for (int k = 0; k < ds.dimN(); ++k) g.push_back(ds.xiN_to_E(xi, unit_vector(ds.dimN(), k)));
  return Subspace(v.dataset_ptr(), Ambient::E, g);
}

bool is_coisotropic(const Subspace& v) {
  if (v.ambient() != Ambient::E) throw InputError("coisotropy is tested for subspaces of E");
  Subspace ann = annihilator(v);
  bool by_definition = is_isotropic(ann);
  bool by_lemma = v.contains(xiN_span(v));
  if (by_definition != by_lemma)
    throw InternalError("coisotropy definition and inclusion criterion disagree");
  return by_definition;
}

namespace {

// U° = {ξ ∈ W* : ι_ξ v = 0 for all v}, for a family of 2-vectors (or 2-forms) on W.
template <class Elem, class Dual>
std::vector<Vec> contraction_kernel(const std::vector<Elem>& vs, int w) {
  // Row (v, k) of the matrix: the k-th coefficient of ι_{e_j} v as j varies.
  std::vector<Vec> rows;
  for (const auto& v : vs) {
    std::vector<Vec> cols;
    for (int j = 1; j <= w; ++j) cols.push_back(interior(Dual::basis(w, {j}), v).coords());
    for (int k = 0; k < w; ++k) {
      Vec r(w);
      for (int j = 0; j < w; ++j) r[j] = cols[j][k];
      rows.push_back(r);
    }
  }
  return nullspace(Matrix::from_rows(rows, w));
}

template <class Elem>
std::vector<Vec> lambda2_of(const std::vector<Vec>& u, int w) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      out.push_back(wedge(Elem::from_coords(w, 1, u[i]), Elem::from_coords(w, 1, u[j])).coords());
  return out;
}

// Is the span of `vs` equal to Λ²U for a subspace U of dimension u_dim?
template <class Elem, class Dual>
bool is_lambda2(const std::vector<Vec>& vs, int w, int u_dim) {
  std::vector<Elem> elems;
  for (const auto& v : vs) elems.push_back(Elem::from_coords(w, 2, v));
  auto u_ann = contraction_kernel<Elem, Dual>(elems, w);
  if (w - static_cast<int>(u_ann.size()) != u_dim) return false;
  auto u = nullspace(Matrix::from_rows(u_ann, w));
  int d = binomial(w, 2);
  return rref_rows(lambda2_of<Elem>(u, w), d) == rref_rows(vs, d);
}

}  // namespace

ColagrangianResult is_colagrangian(const Subspace& v) {
  if (v.ambient() != Ambient::E) throw InputError("co-Lagrangian test applies to subspaces of E");
  const DataSet& ds = v.dataset();
  ColagrangianResult r;
  if (ds.dimN() == 0 && ds.family() != Family::GL && ds.family() != Family::SLwedge2)
    throw InputError("co-Lagrangian test: unsupported data set");
  switch (ds.family()) {
    case Family::GL:
      r.value = v.dim() == 0;
      if (r.value) r.kind = "gl";
      return r;
    case Family::Opq:
      r.value = is_coisotropic(v) && v.dim() == std::max(ds.p(), ds.q());
      if (r.value) r.kind = "opq";
      return r;
    case Family::Exceptional:
      r.value = xiN_span(v) == v;
      if (r.value) r.kind = "standard";
      return r;
    case Family::SLwedge2: {
      if (ds.dimN() == 0) {
        r.value = v.dim() == 0;
        if (r.value) r.kind = "trivial";
        return r;
      }
      int w = ds.n() + 1;
      if (v.dim() > 0 && is_lambda2<Poly, Form>(v.basis(), w, w - 1)) {
        r.value = true;
        r.kind = "type1";
        return r;
      }
      Subspace ann = annihilator(v);
      if (ann.dim() == 3 && is_lambda2<Form, Poly>(ann.basis(), w, 3)) {
        r.value = true;
        r.kind = "type2";
      }
      return r;
    }
  }
  return r;
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) r.entries.push_back(-*it);
  return r;
}

Matrix GroupWord::matrix(int n) const {
  Matrix m = Matrix::identity(exc_dimE(n));
  for (const auto& x : entries) {
    if (x.n != n) throw InputError("group word entry has the wrong size");
    m = exp_nilpotent(act_E_matrix(x)) * m;
  }
  return m;
}

Vec GroupWord::apply(const Vec& u, int n) const {
  ExcEVec v = exc_evec(n, u);
  for (const auto& x : entries) v = exp_nilpotent(x, v);
  return coords(v);
}

Subspace GroupWord::apply(const Subspace& s) const {
  if (s.dataset().family() != Family::Exceptional) throw InputError("group words act on exceptional data sets");
  if (entries.empty()) return s;
  Matrix g = matrix(s.dataset().n());
  if (s.ambient() == Ambient::EDual) g = elg::inverse(g)->transpose();
  return s.transformed(g);
}

GroupWord random_word(int n, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), den(1, 2), kind(0, 4), idx(1, n);
  auto rnd = [&] {
    int c = 0;
    while (c == 0) c = coef(rng);
    return Rat(c, den(rng));
  };
  auto random_index = [&](int k) {
    MultiIndex I;
    while (static_cast<int>(I.size()) < k) {
      int i = idx(rng);
      if (std::find(I.begin(), I.end(), i) == I.end()) I.push_back(i);
    }
    return I;
  };
  GroupWord w;
  while (static_cast<int>(w.entries.size()) < length) {
    int k = kind(rng);
    int deg = (k == 1 || k == 3) ? 6 : 3;
    if (k < 4 && deg > n) continue;
    ExcElem x(n);
    if (k == 4) {
      auto ij = random_index(2);
      x.A(ij[0] - 1, ij[1] - 1) = rnd();
    } else {
      // One or two terms of the chosen piece.
      int terms = deg == 6 ? 1 : 1 + (coef(rng) > 0);
      for (int t = 0; t < terms; ++t) {
        auto I = random_index(deg);
        if (k == 0) x.a3 += Form::basis(n, I, rnd());
        if (k == 1) x.a6 += Form::basis(n, I, rnd());
        if (k == 2) x.w3 += Poly::basis(n, I, rnd());
        if (k == 3) x.w6 += Poly::basis(n, I, rnd());
      }
    }
    if (!x.is_zero()) w.entries.push_back(std::move(x));
  }
  return w;
}

void validate_word(const GroupWord& w, int n) {
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (w.entries[i].n != n) throw InputError("group word entry " + std::to_string(i + 1) + " has the wrong size");
    if (!is_nilpotent_generator(w.entries[i]))
      throw InputError("group word entry " + std::to_string(i + 1) + " is not a nilpotent generator");
  }
}

namespace {

bool supported_in(const ExcEVec& u, int m) {
  auto ok = [m](const auto& e) {
    for (const auto& [idx, c] : e.terms())
      if (idx.back() > m) return false;
    return true;
  };
  return ok(u.X) && ok(u.s2) && ok(u.s5);
}

void step(GroupWord& word, ExcEVec& u, const ExcElem& gen) {
  if (gen.is_zero()) return;
  u = exp_nilpotent(gen, u);
  word.entries.push_back(gen);
}

}  // namespace

NullNormalization normalize_null(const DataSet& ds, const Vec& uc, std::optional<int> m_opt) {
  if (ds.family() != Family::Exceptional) throw InputError("normalize_null needs the exceptional data set");
  int n = ds.n();
  int m = m_opt.value_or(n);
  if (is_zero(uc)) throw PreconditionError("normalize_null: vector is zero");
  if (!is_zero(ds.sym_to_N(uc, uc))) throw PreconditionError("normalize_null: vector is not null");
  ExcEVec u = exc_evec(n, uc);
  if (!supported_in(u, m)) throw InputError("normalize_null: vector is not supported on the active indices");

  GroupWord word;
  for (int guard = 0; u.X.is_zero(); ++guard) {
    if (guard > 3) throw InternalError("normalize_null: no vector part produced");
    if (!u.s2.is_zero()) {
      if (!wedge(u.s2, u.s2).is_zero())
        throw PreconditionError("normalize_null: σ₂∧σ₂ ≠ 0 for a null vector with X = 0");
      const auto& [ab, c] = *u.s2.terms().begin();
      Poly o = Poly::basis(n, ab, Rat(1) / c);
      // Y with ι_Y σ₂ = 0, Y ∈ T_m.
      std::vector<Vec> cols;
      for (int j = 1; j <= m; ++j) cols.push_back(interior(Poly::basis(n, {j}), u.s2).coords());
      auto ys = nullspace(Matrix::from_columns(cols, n));
      bool moved = false;
      for (const auto& y : ys) {
        Poly Y(n, 1);
        for (int j = 0; j < m; ++j) Y.add_term({j + 1}, y[j]);
        ExcElem gen = ExcElem::from(wedge(o, Y));
        if (gen.w3.is_zero()) continue;
        ExcEVec trial = exp_nilpotent(gen, u);
        if (trial.X.is_zero()) continue;
        word.entries.push_back(gen);
        u = trial;
        moved = true;
        break;
      }
      if (!moved) throw InternalError("normalize_null: no admissible w3 step");
    } else {
      const auto& idx = u.s5.terms().begin()->first;
      step(word, u, ExcElem::from(Poly::basis(n, {idx[0], idx[1], idx[2]})));
    }
  }

  int p = u.X.terms().begin()->first[0];
  Form xi = Form::basis(n, {p}, Rat(1) / u.X.coeff({p}));
  if (!u.s2.is_zero()) step(word, u, ExcElem::from(-wedge(u.s2, xi)));
  if (!u.s2.is_zero()) throw InternalError("normalize_null: a3 step left a 2-form part");
  if (!u.s5.is_zero()) step(word, u, ExcElem::from(wedge(u.s5, xi)));
  if (!u.s5.is_zero()) throw InternalError("normalize_null: a6 step left a 5-form part");

  NullNormalization out;
  out.word = std::move(word);
  out.image = coords(u);
  if (out.word.apply(uc, n) != out.image) throw InternalError("normalize_null: word does not reproduce its image");
  return out;
}

Subspace canonical_lagrangian(std::shared_ptr<const DataSet> ds, OrbitLabel label) {
  int n = ds->n(), d = ds->dimE();
  std::vector<Vec> g;
  if (label == OrbitLabel::DimN) {
    for (int i = 0; i < n; ++i) g.push_back(unit_vector(d, i));
  } else if (label == OrbitLabel::DimNMinus1) {
    for (int i = 2; i < n; ++i) g.push_back(unit_vector(d, i));
    g.push_back(unit_vector(d, n));  // e¹∧e² is the first Λ² coordinate
  } else {
    throw InputError("no canonical form for a non-Lagrangian label");
  }
  return Subspace(std::move(ds), Ambient::E, g);
}

Subspace standard_colagrangian(std::shared_ptr<const DataSet> ds) {
  int n = ds->n(), d = ds->dimE();
  std::vector<Vec> g;
  for (int i = n; i < d; ++i) g.push_back(unit_vector(d, i));
  return Subspace(std::move(ds), Ambient::E, g);
}

LagrangianNormalization normalize_lagrangian(const Subspace& w) {
  const DataSet& ds = w.dataset();
  if (ds.family() != Family::Exceptional) throw InputError("normalize_lagrangian needs the exceptional data set");
  if (w.ambient() != Ambient::E) throw InputError("normalize_lagrangian acts on subspaces of E");
  if (!is_isotropic(w)) throw PreconditionError("normalize_lagrangian: subspace is not isotropic");
  int n = ds.n(), d = ds.dimE();

  LagrangianNormalization out;
  for (OrbitLabel l : {OrbitLabel::DimN, OrbitLabel::DimNMinus1})
    if (w == canonical_lagrangian(w.dataset_ptr(), l)) {
      out.label = l;
      return out;
    }
  std::vector<Vec> vs = w.basis();
  auto apply_gen = [&](const GroupWord& g) {
    if (g.empty()) return;
    Matrix mat = g.matrix(n);
    for (auto& v : vs) v = mat * v;
    out.word.append(g);
  };

  for (int m = n; m >= 3; --m) {
    if (vs.empty()) return out;  // not maximal
    apply_gen(normalize_null(ds, vs[0], m).word);

    // Align ω₁ ∈ T_m with e_m using transvections.
    Vec x(vs[0].begin(), vs[0].begin() + n);
    if (x[m - 1].is_zero()) {
      int j = 0;
      while (x[j].is_zero()) ++j;
      apply_gen(GroupWord{{ExcElem::gl(Matrix::unit(n, n, m - 1, j))}});
      x.assign(vs[0].begin(), vs[0].begin() + n);
    }
    Matrix a(n, n);
    for (int j = 0; j < m - 1; ++j)
      if (!x[j].is_zero()) a(j, m - 1) = -(x[j] / x[m - 1]);
    if (!a.is_zero()) apply_gen(GroupWord{{ExcElem::gl(a)}});

    const Vec& w1 = vs[0];
    Rat lambda = w1[m - 1];
    std::vector<Vec> rest;
    for (std::size_t i = 1; i < vs.size(); ++i) {
      Vec v = vs[i] - (vs[i][m - 1] / lambda) * w1;
      if (!supported_in(exc_evec(n, v), m - 1))
        throw InternalError("normalize_lagrangian: remaining generator not in the smaller space");
      rest.push_back(std::move(v));
    }
    vs = rref_rows(rest, d);
  }

  // Base case on E_2 = span(e₁, e₂, e¹∧e²).
  if (vs.size() == 2) {
    out.label = OrbitLabel::DimN;
  } else if (vs.size() == 1) {
    Vec v = vs[0];
    bool pure = true;
    for (int i = 0; i < d; ++i)
      if (i != n && !v[i].is_zero()) pure = false;
    if (pure && !v[n].is_zero()) out.label = OrbitLabel::DimNMinus1;
  }
  if (out.label != OrbitLabel::NotLagrangian) {
    auto ds_ptr = w.dataset_ptr();
    if (out.word.apply(w) != canonical_lagrangian(ds_ptr, out.label))
      throw InternalError("normalize_lagrangian: word does not reach the canonical form");
  }
  return out;
}

namespace {

const SpanSolver& exc_action_span(int n) {
  static std::mutex mu;
  static std::map<int, SpanSolver> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Vec> flats;
    for (const auto& b : exc_basis(n)) flats.push_back(act_E_matrix(b).flat());
    it = cache.emplace(n, SpanSolver(flats, exc_dimE(n) * exc_dimE(n))).first;
  }
  return it->second;
}

}  // namespace

ExcElem dual_generator(const DataSet& ds, const ExcElem& x) {
  int n = ds.n();
  Matrix target = Rat(-1) * act_E_matrix(x).transpose();
  auto co = exc_action_span(n).coordinates(target.flat());
  if (!co) throw InternalError("minus-transpose of a generator is not in the algebra");
  return exc_from_coords(n, *co);
}

GroupWord normalize_pair(const Subspace& v, const Subspace& w) {
  const DataSet& ds = v.dataset();
  if (ds.family() != Family::Exceptional) throw InputError("normalize_pair needs the exceptional data set");
  if (v.ambient() != Ambient::E || w.ambient() != Ambient::E) throw InputError("normalize_pair acts on subspaces of E");
  int n = ds.n();
  if (!is_colagrangian(v).value) throw PreconditionError("V is not co-Lagrangian");
  if (v.codim() != n) throw PreconditionError("V does not have codimension n");
  if (!is_isotropic(w) || w.dim() != n || normalize_lagrangian(w).label != OrbitLabel::DimN)
    throw PreconditionError("W is not a Lagrangian subspace of dimension n");
  if (v.dim() + w.dim() != v.ambient_dim() || (v + w).dim() != v.ambient_dim())
    throw PreconditionError("V and W are not complementary");

  // V° ⊂ E* read in E coordinates is isotropic for the mirrored map; bring it to T and
  // transport the word through minus-transpose so that it acts on V.
  Subspace ann = annihilator(v).relabeled(Ambient::E);
  auto dual = normalize_lagrangian(ann);
  if (dual.label != OrbitLabel::DimN) throw PreconditionError("V is not in the orbit of the standard co-Lagrangian");
  GroupWord h;
  for (const auto& x : dual.word.entries) h.entries.push_back(dual_generator(ds, x));
  auto std_v = standard_colagrangian(v.dataset_ptr());
  if (h.apply(v) != std_v) throw InternalError("normalize_pair: dual normalization did not reach Λ²T*⊕Λ⁵T*");

  auto second = normalize_lagrangian(h.apply(w));
  if (second.label != OrbitLabel::DimN) throw InternalError("normalize_pair: complement lost its orbit");
  for (const auto& x : second.word.entries) {
    Piece p = piece_of(x);
    if (p != Piece::A3 && p != Piece::A6 && p != Piece::Gl)
      throw InternalError("normalize_pair: complement normalization left the stabilizer of V");
  }
  h.append(second.word);
  if (h.apply(v) != std_v || h.apply(w) != canonical_lagrangian(v.dataset_ptr(), OrbitLabel::DimN))
    throw InternalError("normalize_pair: final pair is not standard");
  return h;
}

}  // namespace elg
