#include "elg/exc_algebra.hpp"

#include <sstream>

#include "elg/dataset.hpp"
#include "elg/error.hpp"

namespace elg {

namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) throw InputError(std::string(what) + ": dimension mismatch");
}

template <class T>
void append(Vec& v, const T& x) {
  Vec c = x.coords();
  v.insert(v.end(), c.begin(), c.end());
}

}  // namespace

ExcElem::ExcElem(int n)
    : n(n), A(n, n), a3(n, 3), a6(n, 6), w3(n, 3), w6(n, 6) {}

ExcElem ExcElem::central(int n, const Rat& c) {
  ExcElem x(n);
  x.c = c;
  return x;
}

ExcElem ExcElem::gl(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("gl(T) element must be square");
  ExcElem x(a.rows());
  x.A = a;
  return x;
}

ExcElem ExcElem::from(const Form& a) {
  ExcElem x(a.dim());
  if (a.deg() == 3) x.a3 = a;
  else if (a.deg() == 6) x.a6 = a;
  else throw InputError("only 3- and 6-forms are algebra elements");
  return x;
}

ExcElem ExcElem::from(const Poly& w) {
  ExcElem x(w.dim());
  if (w.deg() == 3) x.w3 = w;
  else if (w.deg() == 6) x.w6 = w;
  else throw InputError("only 3- and 6-vectors are algebra elements");
  return x;
}

bool ExcElem::is_zero() const {
  return c.is_zero() && A.is_zero() && a3.is_zero() && a6.is_zero() && w3.is_zero() && w6.is_zero();
}

ExcElem& ExcElem::operator+=(const ExcElem& o) {
  check_same_n(n, o.n, "algebra sum");
  c += o.c;
  A += o.A;
  a3 += o.a3;
  a6 += o.a6;
  w3 += o.w3;
  w6 += o.w6;
  return *this;
}

ExcElem& ExcElem::operator-=(const ExcElem& o) { return *this += -o; }

ExcElem operator*(const Rat& s, ExcElem a) {
  a.c *= s;
  a.A = s * a.A;
  a.a3 *= s;
  a.a6 *= s;
  a.w3 *= s;
  a.w6 *= s;
  return a;
}

Piece piece_of(const ExcElem& x) {
  Piece found = Piece::Zero;
  auto note = [&](bool nonzero, Piece p) {
    if (!nonzero) return;
    found = found == Piece::Zero ? p : Piece::Mixed;
  };
  note(!x.c.is_zero(), Piece::Central);
  note(!x.A.is_zero(), Piece::Gl);
  note(!x.a3.is_zero(), Piece::A3);
  note(!x.a6.is_zero(), Piece::A6);
  note(!x.w3.is_zero(), Piece::W3);
  note(!x.w6.is_zero(), Piece::W6);
  return found;
}

std::string to_string(Piece p) {
  switch (p) {
    case Piece::Zero: return "zero";
    case Piece::Central: return "c";
    case Piece::Gl: return "gl";
    case Piece::A3: return "a3";
    case Piece::A6: return "a6";
    case Piece::W3: return "w3";
    case Piece::W6: return "w6";
    case Piece::Mixed: return "mixed";
  }
  return "?";
}

int exc_algebra_dim(int n) { return 1 + n * n + 2 * binomial(n, 3) + 2 * binomial(n, 6); }

std::vector<ExcElem> exc_basis(int n) {
  std::vector<ExcElem> b;
  b.push_back(ExcElem::central(n, 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.push_back(ExcElem::gl(Matrix::unit(n, n, i, j)));
  for (const auto& I : combinations(n, 3)) b.push_back(ExcElem::from(Form::basis(n, I)));
  for (const auto& I : combinations(n, 6)) b.push_back(ExcElem::from(Form::basis(n, I)));
  for (const auto& I : combinations(n, 3)) b.push_back(ExcElem::from(Poly::basis(n, I)));
  for (const auto& I : combinations(n, 6)) b.push_back(ExcElem::from(Poly::basis(n, I)));
  return b;
}

Vec exc_coords(const ExcElem& x) {
  Vec v{x.c};
  v.insert(v.end(), x.A.flat().begin(), x.A.flat().end());
  append(v, x.a3);
  append(v, x.a6);
  append(v, x.w3);
  append(v, x.w6);
  return v;
}

ExcElem exc_from_coords(int n, const Vec& v) {
  if (static_cast<int>(v.size()) != exc_algebra_dim(n)) throw InputError("algebra coordinates have wrong length");
  ExcElem x(n);
  std::size_t p = 0;
  auto take = [&](int len) {
    Vec s(v.begin() + static_cast<std::ptrdiff_t>(p), v.begin() + static_cast<std::ptrdiff_t>(p + len));
    p += len;
    return s;
  };
  x.c = take(1)[0];
  x.A = Matrix::from_flat(n, n, take(n * n));
  x.a3 = Form::from_coords(n, 3, take(binomial(n, 3)));
  x.a6 = Form::from_coords(n, 6, take(binomial(n, 6)));
  x.w3 = Poly::from_coords(n, 3, take(binomial(n, 3)));
  x.w6 = Poly::from_coords(n, 6, take(binomial(n, 6)));
  return x;
}

namespace {

// Adds sign·((a⋆w − frac·⟨a,w⟩𝟙) + frac·⟨a,w⟩) to the gl(T) ⊕ R part of r.
void add_star_term(ExcElem& r, const Poly& w, const Form& a, const Rat& frac, const Rat& sign) {
  if (w.is_zero() || a.is_zero()) return;
  Rat p = pairing(a, w);
  Matrix m = star(a, w);
  for (int i = 0; i < r.n; ++i) m(i, i) -= frac * p;
  r.A += sign * m;
  r.c += sign * frac * p;
}

}  // namespace

ExcElem exc_bracket(const ExcElem& x, const ExcElem& y) {
  check_same_n(x.n, y.n, "exc_bracket");
  int n = x.n;
  ExcElem r(n);
  r.A = commutator(x.A, y.A);

  r.a3 = gl_act(x.A, y.a3) - gl_act(y.A, x.a3);
  r.a6 = gl_act(x.A, y.a6) - gl_act(y.A, x.a6);
  r.w3 = gl_act(x.A, y.w3) - gl_act(y.A, x.w3);
  r.w6 = gl_act(x.A, y.w6) - gl_act(y.A, x.w6);

  r.a6 -= wedge(x.a3, y.a3);
  r.w6 -= wedge(x.w3, y.w3);
  r.a3 += interior(y.w3, x.a6);
  r.a3 -= interior(x.w3, y.a6);
  // [a3, w6] contracts from the right: −ι_{a3}w6 in the left-contraction convention.
  r.w3 -= interior(x.a3, y.w6);
  r.w3 += interior(y.a3, x.w6);

  const Rat third(1, 3), two_thirds(2, 3);
  add_star_term(r, x.w3, y.a3, third, 1);
  add_star_term(r, y.w3, x.a3, third, -1);
  add_star_term(r, x.w6, y.a6, two_thirds, -1);
  add_star_term(r, y.w6, x.a6, two_thirds, 1);
  return r;
}

ExcElem embed_e_n(const ExcElem& x) {
  if (x.n < 2 || x.n > 6) throw InputError("embed_e_n: n must be between 2 and 6");
  ExcElem r = x;
  r.c = x.A.trace() / Rat(9 - x.n);
  return r;
}

ExcEVec::ExcEVec(int n) : X(n, 1), s2(n, 2), s5(n, 5) {}
ExcEDual::ExcEDual(int n) : alpha(n, 1), w2(n, 2), w5(n, 5) {}

ExcNVec::ExcNVec(int n) : n1(n, 1), n4(n, 4) {
  for (int i = 0; i < n; ++i) n7.slots.emplace_back(n, 6);
}

ExcNDual::ExcNDual(int n) : m1(n, 1), m4(n, 4) {
  for (int i = 0; i < n; ++i) m7.slots.emplace_back(n, 6);
}

int exc_dimE(int n) { return n + binomial(n, 2) + binomial(n, 5); }
int exc_dimN(int n) { return n + binomial(n, 4) + n * binomial(n, 6); }

Vec coords(const ExcEVec& u) {
  Vec v;
  append(v, u.X);
  append(v, u.s2);
  append(v, u.s5);
  return v;
}

Vec coords(const ExcEDual& u) {
  Vec v;
  append(v, u.alpha);
  append(v, u.w2);
  append(v, u.w5);
  return v;
}

Vec coords(const ExcNVec& m) {
  Vec v;
  append(v, m.n1);
  append(v, m.n4);
  for (const auto& s : m.n7.slots) append(v, s);
  return v;
}

Vec coords(const ExcNDual& m) {
  Vec v;
  append(v, m.m1);
  append(v, m.m4);
  for (const auto& s : m.m7.slots) append(v, s);
  return v;
}

namespace {

struct Cursor {
  const Vec& v;
  std::size_t p = 0;
  Vec take(int len) {
    if (p + len > v.size()) throw InputError("coordinate vector too short");
    Vec s(v.begin() + static_cast<std::ptrdiff_t>(p), v.begin() + static_cast<std::ptrdiff_t>(p + len));
    p += len;
    return s;
  }
  void done() const {
    if (p != v.size()) throw InputError("coordinate vector too long");
  }
};

}  // namespace

ExcEVec exc_evec(int n, const Vec& v) {
  Cursor c{v};
  ExcEVec u(n);
  u.X = Poly::from_coords(n, 1, c.take(n));
  u.s2 = Form::from_coords(n, 2, c.take(binomial(n, 2)));
  u.s5 = Form::from_coords(n, 5, c.take(binomial(n, 5)));
  c.done();
  return u;
}

ExcEDual exc_edual(int n, const Vec& v) {
  Cursor c{v};
  ExcEDual u(n);
  u.alpha = Form::from_coords(n, 1, c.take(n));
  u.w2 = Poly::from_coords(n, 2, c.take(binomial(n, 2)));
  u.w5 = Poly::from_coords(n, 5, c.take(binomial(n, 5)));
  c.done();
  return u;
}

ExcNVec exc_nvec(int n, const Vec& v) {
  Cursor c{v};
  ExcNVec m(n);
  m.n1 = Form::from_coords(n, 1, c.take(n));
  m.n4 = Form::from_coords(n, 4, c.take(binomial(n, 4)));
  for (auto& s : m.n7.slots) s = Form::from_coords(n, 6, c.take(binomial(n, 6)));
  c.done();
  return m;
}

ExcNDual exc_ndual(int n, const Vec& v) {
  Cursor c{v};
  ExcNDual m(n);
  m.m1 = Poly::from_coords(n, 1, c.take(n));
  m.m4 = Poly::from_coords(n, 4, c.take(binomial(n, 4)));
  for (auto& s : m.m7.slots) s = Poly::from_coords(n, 6, c.take(binomial(n, 6)));
  c.done();
  return m;
}

namespace {

template <class Slots>
void add_slots(Slots& into, const Slots& from) {
  for (std::size_t i = 0; i < into.slots.size(); ++i) into.slots[i] += from.slots[i];
}

}  // namespace

ExcNVec exc_sym_to_N(const ExcEVec& u, const ExcEVec& v) {
  check_same_n(u.n(), v.n(), "sym_to_N");
  ExcNVec m(u.n());
  m.n1 = interior(u.X, v.s2) + interior(v.X, u.s2);
  m.n4 = interior(u.X, v.s5) + interior(v.X, u.s5) - wedge(u.s2, v.s2);
  m.n7 = jmap(u.s2, v.s5);
  add_slots(m.n7, jmap(v.s2, u.s5));
  return m;
}

ExcNDual exc_sym_to_Nstar(const ExcEDual& xi, const ExcEDual& eta) {
  check_same_n(xi.alpha.dim(), eta.alpha.dim(), "sym_to_Nstar");
  ExcNDual m(xi.alpha.dim());
  m.m1 = interior(xi.alpha, eta.w2) + interior(eta.alpha, xi.w2);
  m.m4 = interior(xi.alpha, eta.w5) + interior(eta.alpha, xi.w5) - wedge(xi.w2, eta.w2);
  m.m7 = jmap(xi.w2, eta.w5);
  add_slots(m.m7, jmap(eta.w2, xi.w5));
  return m;
}

ExcEVec act_E(const ExcElem& x, const ExcEVec& u) {
  check_same_n(x.n, u.n(), "act_E");
  ExcEVec r(x.n);
  r.X = gl_act(x.A, u.X) + x.c * u.X + interior(u.s2, x.w3) + interior(u.s5, x.w6);
  r.s2 = gl_act(x.A, u.s2) + x.c * u.s2 + interior(x.w3, u.s5) + interior(u.X, x.a3);
  r.s5 = gl_act(x.A, u.s5) + x.c * u.s5 + wedge(x.a3, u.s2) + interior(u.X, x.a6);
  return r;
}

Matrix act_E_matrix(const ExcElem& x) {
  int n = x.n, d = exc_dimE(n);
  std::vector<Vec> cols;
  cols.reserve(d);
  for (int k = 0; k < d; ++k) cols.push_back(coords(act_E(x, exc_evec(n, unit_vector(d, k)))));
  return Matrix::from_columns(cols, d);
}

ExcNVec act_N(const DataSet& ds, const ExcElem& x, const ExcNVec& m) {
  if (ds.family() != Family::Exceptional || ds.n() != x.n) throw InputError("act_N: data set does not match");
  return exc_nvec(x.n, ds.act_N(act_E_matrix(x), coords(m)));
}

bool is_nilpotent_generator(const ExcElem& x) {
  switch (piece_of(x)) {
    case Piece::A3:
    case Piece::A6:
    case Piece::W3:
    case Piece::W6:
      return true;
    case Piece::Gl: {
      Matrix p = x.A;
      for (int k = 1; k < x.n; ++k) p = p * x.A;
      return p.is_zero();
    }
    default:
      return false;
  }
}

ExcEVec exp_nilpotent(const ExcElem& gen, const ExcEVec& u) {
  if (gen.is_zero()) return u;
  if (!is_nilpotent_generator(gen))
    throw PreconditionError("exp_nilpotent: generator is not a single nilpotent piece");
  Vec result = coords(u), term = result;
  Matrix m = act_E_matrix(gen);
  for (int k = 1; k <= m.rows() + 1; ++k) {
    term = Rat(1, k) * (m * term);
    if (is_zero(term)) return exc_evec(gen.n, result);
    result = result + term;
  }
  throw InternalError("exp_nilpotent: action did not terminate");
}

bool AlgebraReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using Sparse = std::vector<std::pair<int, Rat>>;

Sparse sparse(const Vec& v) {
  Sparse s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

std::string describe(const Vec& v) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    os << (first ? "" : ", ") << i + 1 << ": " << v[i];
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace

AlgebraReport verify_algebra(int n) {
  if (n < 2 || n > 6) throw InputError("verify_algebra: n must be between 2 and 6");
  AlgebraReport rep;
  rep.n = n;
  auto basis = exc_basis(n);
  int d = static_cast<int>(basis.size());
  rep.dimension = d;
  rep.expected_dimension = exc_algebra_dim(n);

  // Structure constants C[i][j] = coords [b_i, b_j].
  std::vector<std::vector<Sparse>> C(d, std::vector<Sparse>(d));
  AlgebraCheck anti{"antisymmetry", true, {}};
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Vec v = exc_coords(exc_bracket(basis[i], basis[j]));
      Vec w = exc_coords(exc_bracket(basis[j], basis[i]));
      if (anti.pass && !is_zero(v + w)) {
        anti.pass = false;
        anti.witness = "basis pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      }
      C[i][j] = sparse(v);
      C[j][i] = sparse(w);
    }
  rep.checks.push_back(anti);

  auto bracket_sparse = [&](int i, const Sparse& y) {
    Vec r(d);
    for (const auto& [m, a] : y)
      for (const auto& [l, b] : C[i][m]) r[l] += a * b;
    return r;
  };

  AlgebraCheck jac{"jacobi", true, {}};
  for (int i = 0; i < d && jac.pass; ++i)
    for (int j = i + 1; j < d && jac.pass; ++j)
      for (int k = j + 1; k < d && jac.pass; ++k) {
        Vec r = bracket_sparse(i, C[j][k]) + bracket_sparse(j, C[k][i]) + bracket_sparse(k, C[i][j]);
        if (!is_zero(r)) {
          jac.pass = false;
          jac.witness = "basis triple (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                        std::to_string(k + 1) + ") residual " + describe(r);
        }
      }
  rep.checks.push_back(jac);

  std::vector<Matrix> M;
  M.reserve(d);
  for (const auto& b : basis) M.push_back(act_E_matrix(b));
  AlgebraCheck repr{"representation", true, {}};
  for (int i = 0; i < d && repr.pass; ++i)
    for (int j = i + 1; j < d && repr.pass; ++j) {
      Matrix lhs = commutator(M[i], M[j]);
      for (const auto& [m, a] : C[i][j]) lhs -= a * M[m];
      if (!lhs.is_zero()) {
        repr.pass = false;
        repr.witness = "basis pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
      }
    }
  rep.checks.push_back(repr);

  AlgebraCheck dim{"dimension", true, {}};
  dim.pass = d == rep.expected_dimension;
  if (!dim.pass) dim.witness = std::to_string(d) + " != " + std::to_string(rep.expected_dimension);
  rep.checks.push_back(dim);

  std::vector<Vec> flats;
  for (const auto& m : M) flats.push_back(m.flat());
  int dE = exc_dimE(n);
  AlgebraCheck faithful{"faithful", true, {}};
  SpanSolver span(flats, dE * dE);
  faithful.pass = span.independent();
  if (!faithful.pass) faithful.witness = "rank " + std::to_string(span.rank()) + " < " + std::to_string(d);
  rep.checks.push_back(faithful);

  if (n >= 3) {
    // Bracket of embedded elements stays embedded: c·(9−n) = tr A.
    AlgebraCheck closure{"e_n_closure", true, {}};
    std::vector<Sparse> emb;
    for (int i = 1; i < d; ++i) emb.push_back(sparse(exc_coords(embed_e_n(basis[i]))));
    auto trace_of = [&](const Vec& v) {
      Rat t;
      for (int i = 0; i < n; ++i) t += v[1 + i * n + i];
      return t;
    };
    for (std::size_t a = 0; a < emb.size() && closure.pass; ++a)
      for (std::size_t b = a + 1; b < emb.size() && closure.pass; ++b) {
        Vec r(d);
        for (const auto& [i, x] : emb[a])
          for (const auto& [j, y] : emb[b])
            for (const auto& [l, z] : C[i][j]) r[l] += x * y * z;
        if (r[0] * Rat(9 - n) != trace_of(r)) {
          closure.pass = false;
          closure.witness = "embedded basis pair (" + std::to_string(a + 2) + ", " + std::to_string(b + 2) + ")";
        }
      }
    rep.checks.push_back(closure);

    AlgebraCheck equi{"sym_to_N_equivariance", true, {}};
    DataSet ds = build_exceptional(n);
    if (auto fail = ds.equivariance_failure()) {
      equi.pass = false;
      equi.witness = *fail;
    }
    rep.checks.push_back(equi);
  }
  return rep;
}

}  // namespace elg
