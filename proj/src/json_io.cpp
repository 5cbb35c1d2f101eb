#include "elg/json_io.hpp"

#include <fstream>
#include <sstream>

#include "elg/error.hpp"
#include "elg/multi_index.hpp"

namespace elg::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<int>();
}

template <class E>
json ext_to_json(const E& x) {
  json terms = json::array();
  for (const auto& [idx, c] : x.terms()) terms.push_back(json::array({idx, to_json(c)}));
  return {{"dim", x.dim()}, {"deg", x.deg()}, {"terms", terms}};
}

template <class E>
E ext_from_json(const json& j) {
  int dim = int_field(j, "dim"), deg = int_field(j, "deg");
  if (dim < 0 || deg < 0) throw InputError("negative dimension or degree");
  E out(dim, deg);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("'terms' must be an array");
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      throw InputError("each term must be [[indices], \"p/q\"]");
    MultiIndex idx;
    for (const auto& i : t[0]) idx.push_back(as_int(i, "index"));
    if (static_cast<int>(idx.size()) != deg) throw InputError("term has the wrong number of indices");
    for (int i : idx)
      if (i < 1 || i > dim) throw InputError("index out of range 1.." + std::to_string(dim));
    out += E::basis(dim, idx, rat_from_json(t[1]));
  }
  return out;
}

}  // namespace

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  throw InputError("rational must be a string \"p/q\" or an integer");
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vector must be an array");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != cols) throw InputError("matrix rows have different lengths");
  return Matrix::from_rows(rows, cols);
}

json to_json(const Form& f) { return ext_to_json(f); }
json to_json(const Poly& p) { return ext_to_json(p); }
Form form_from_json(const json& j) { return ext_from_json<Form>(j); }
Poly poly_from_json(const json& j) { return ext_from_json<Poly>(j); }

json to_json(const LieAlg& k) {
  json f = json::array();
  for (const auto& e : k.entries()) f.push_back(json::array({e.i, e.j, e.k, to_json(e.value)}));
  return {{"dim", k.dim()}, {"f", f}};
}

LieAlg lie_from_json(const json& j) {
  int dim = int_field(j, "dim");
  if (dim < 0) throw InputError("negative dimension");
  std::vector<StructureConstant> sc;
  for (const auto& e : field(j, "f")) {
    if (!e.is_array() || e.size() != 4) throw InputError("structure constants are [i, j, k, \"p/q\"]");
    sc.push_back({as_int(e[0], "i"), as_int(e[1], "j"), as_int(e[2], "k"), rat_from_json(e[3])});
  }
  return LieAlg(dim, sc);
}

json to_json(const DataSet& ds, bool with_g_basis) {
  json j = {{"family", to_string(ds.family())}};
  if (ds.family() == Family::Opq) {
    j["p"] = ds.p();
    j["q"] = ds.q();
  } else {
    j["n"] = ds.n();
  }
  j["embed_scale"] = to_json(ds.embed_scale());
  if (with_g_basis) {
    json g = json::array();
    for (const auto& m : ds.g_basis()) g.push_back(to_json(m));
    j["g_basis"] = g;
  }
  return j;
}

std::shared_ptr<const DataSet> dataset_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) throw InputError("'family' must be a string");
  Family f = parse_family(fam.get<std::string>());
  DataSet ds = [&] {
    if (f == Family::Opq && j.contains("p")) {
      int p = int_field(j, "p"), q = int_field(j, "q");
      if (p < 0 || q < 0 || p + q < 1 || p + q > 16) throw InputError("O(p,q) needs 1 <= p+q <= 16");
      return build_opq(p, q);
    }
    int n = int_field(j, "n");
    if (n < 1 || n > 8) throw InputError("n out of range");
    return build_dataset(f, n);
  }();
  if (j.contains("embed_scale")) ds.set_embed_scale(rat_from_json(j.at("embed_scale")));
  if (j.contains("g_basis")) {
    std::vector<Matrix> g;
    for (const auto& m : j.at("g_basis")) {
      Matrix x = matrix_from_json(m);
      if (x.rows() != ds.dimE() || x.cols() != ds.dimE())
        throw InputError("g_basis matrices must be " + std::to_string(ds.dimE()) + "x" + std::to_string(ds.dimE()));
      g.push_back(std::move(x));
    }
    ds.set_g_basis(std::move(g));
  }
  return std::make_shared<const DataSet>(std::move(ds));
}

json to_json(const Subspace& v) {
  json b = json::array();
  for (const auto& r : v.basis()) b.push_back(to_json(r));
  return {{"ambient", to_string(v.ambient())}, {"dataset", to_json(v.dataset(), false)}, {"basis", b}};
}

Subspace subspace_from_json(const json& j, std::shared_ptr<const DataSet> ds) {
  const json& amb = field(j, "ambient");
  if (!amb.is_string()) throw InputError("'ambient' must be a string");
  std::string a = amb.get<std::string>();
  Ambient ambient;
  if (a == "E") ambient = Ambient::E;
  else if (a == "Edual" || a == "E*") ambient = Ambient::EDual;
  else throw InputError("ambient must be \"E\" or \"Edual\"");
  auto own = dataset_from_json(field(j, "dataset"));
  if (!ds || ds->fingerprint() != own->fingerprint()) ds = own;
  std::vector<Vec> rows;
  for (const auto& r : field(j, "basis")) {
    Vec v = vec_from_json(r);
    if (static_cast<int>(v.size()) != ds->dimE())
      throw InputError("basis vectors must have length " + std::to_string(ds->dimE()));
    rows.push_back(std::move(v));
  }
  return Subspace(ds, ambient, rows);
}

json to_json(const Elgebra& e) {
  json c = json::array();
  for (const auto& b : e.entries()) c.push_back(json::array({b.alpha, b.beta, b.gamma, to_json(b.value)}));
  json d = json::array();
  const Matrix& D = e.D();
  for (int i = 0; i < D.rows(); ++i)
    for (int k = 0; k < D.cols(); ++k)
      if (!D(i, k).is_zero()) d.push_back(json::array({i + 1, k + 1, to_json(D(i, k))}));
  json j = {{"dataset", to_json(e.dataset(), false)}, {"c", c}, {"D", d}};
  if (e.model()) {
    j["lie"] = to_json(e.model()->k);
    j["F1"] = to_json(e.model()->twist.F1);
    j["F4"] = to_json(e.model()->twist.F4);
  }
  return j;
}

Elgebra elgebra_from_json(const json& j) {
  auto ds = dataset_from_json(field(j, "dataset"));
  std::vector<BracketEntry> c;
  for (const auto& e : field(j, "c")) {
    if (!e.is_array() || e.size() != 4) throw InputError("bracket entries are [alpha, beta, gamma, \"p/q\"]");
    c.push_back({as_int(e[0], "alpha"), as_int(e[1], "beta"), as_int(e[2], "gamma"), rat_from_json(e[3])});
  }
  std::optional<Matrix> D;
  if (j.contains("D")) {
    Matrix m(ds->dimE(), ds->dimN());
    for (const auto& e : j.at("D")) {
      if (!e.is_array() || e.size() != 3) throw InputError("D entries are [i, j, \"p/q\"]");
      int r = as_int(e[0], "i"), k = as_int(e[1], "j");
      if (r < 1 || r > m.rows() || k < 1 || k > m.cols()) throw InputError("D entry out of range");
      m(r - 1, k - 1) += rat_from_json(e[2]);
    }
    D = std::move(m);
  }
  Elgebra out(ds, c, D);
  if (j.contains("lie")) {
    LieModel model{lie_from_json(j.at("lie")), Twist{form_from_json(field(j, "F1")), form_from_json(field(j, "F4"))}};
    // The model is only trusted if it reproduces the stored bracket.
    Elgebra rebuilt = from_lie_twisted(model.k, model.twist, ds);
    if (!(rebuilt.D() == out.D())) throw InputError("embedded Lie model does not reproduce D");
    for (int a = 0; a < out.dim(); ++a)
      if (!(rebuilt.ad(a) == out.ad(a))) throw InputError("embedded Lie model does not reproduce the bracket");
    out.set_model(std::move(model));
  }
  return out;
}

json to_json(const ExcElem& x) {
  json j = json::object();
  if (!x.c.is_zero()) j["c"] = to_json(x.c);
  json a = json::array();
  for (int r = 0; r < x.A.rows(); ++r)
    for (int k = 0; k < x.A.cols(); ++k)
      if (!x.A(r, k).is_zero()) a.push_back(json::array({r + 1, k + 1, to_json(x.A(r, k))}));
  if (!a.empty()) j["A"] = a;
  if (!x.a3.is_zero()) j["a3"] = to_json(x.a3);
  if (!x.a6.is_zero()) j["a6"] = to_json(x.a6);
  if (!x.w3.is_zero()) j["w3"] = to_json(x.w3);
  if (!x.w6.is_zero()) j["w6"] = to_json(x.w6);
  return j;
}

ExcElem exc_elem_from_json(const json& j, int n) {
  if (!j.is_object()) throw InputError("word entries must be objects");
  ExcElem x(n);
  if (j.contains("c")) x.c = rat_from_json(j.at("c"));
  if (j.contains("A"))
    for (const auto& e : j.at("A")) {
      if (!e.is_array() || e.size() != 3) throw InputError("A entries are [i, j, \"p/q\"]");
      int r = as_int(e[0], "i"), k = as_int(e[1], "j");
      if (r < 1 || r > n || k < 1 || k > n) throw InputError("A entry out of range");
      x.A(r - 1, k - 1) += rat_from_json(e[2]);
    }
  auto form = [&](const char* key, int deg) {
    if (!j.contains(key)) return Form(n, deg);
    Form f = form_from_json(j.at(key));
    if (f.dim() != n || f.deg() != deg) throw InputError(std::string("'") + key + "' has the wrong shape");
    return f;
  };
  auto poly = [&](const char* key, int deg) {
    if (!j.contains(key)) return Poly(n, deg);
    Poly p = poly_from_json(j.at(key));
    if (p.dim() != n || p.deg() != deg) throw InputError(std::string("'") + key + "' has the wrong shape");
    return p;
  };
  x.a3 = form("a3", 3);
  x.a6 = form("a6", 6);
  x.w3 = poly("w3", 3);
  x.w6 = poly("w6", 6);
  return x;
}

json to_json(const GroupWord& w, int n) {
  json e = json::array();
  for (const auto& x : w.entries) e.push_back(to_json(x));
  return {{"n", n}, {"entries", e}};
}

GroupWord word_from_json(const json& j) {
  int n = int_field(j, "n");
  if (n < 1 || n > 8) throw InputError("n out of range");
  GroupWord w;
  for (const auto& e : field(j, "entries")) w.entries.push_back(exc_elem_from_json(e, n));
  validate_word(w, n);
  return w;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json x = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    checks.push_back(x);
  }
  return {{"pass", r.pass()}, {"checks", checks}};
}

json to_json(const ParallelisationCertificate& c) {
  json checks = json::array();
  for (const auto& x : c.checks) {
    json y = {{"name", x.name}, {"pass", x.pass}};
    if (!x.witness.empty()) y["witness"] = x.witness;
    checks.push_back(y);
  }
  json j = {{"pass", c.pass()}, {"checks", checks}};
  if (c.pass()) {
    j["dim_gE"] = c.dim_gE;
    j["dim_gV"] = c.dim_gV;
  }
  return j;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace elg::io
