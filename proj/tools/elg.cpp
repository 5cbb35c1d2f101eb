#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>

#include "elg/dataset.hpp"
#include "elg/elgebra.hpp"
#include "elg/error.hpp"
#include "elg/exc_algebra.hpp"
#include "elg/json_io.hpp"
#include "elg/subspace.hpp"
#include "elg/suite.hpp"

using namespace elg;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct Globals {
  std::string out;
  bool quick = false;
  std::uint64_t seed = 1;
  std::vector<std::string> argv;
};

json check_list(const std::vector<Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) {
    json x = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    a.push_back(x);
  }
  return a;
}

/// Prints {"report": ..., "timing": ...}; the report body alone is written to --out.
int emit(const Globals& g, json report, double seconds, bool pass, bool out_is_report = true) {
  json cmd = json::array();
  for (std::size_t i = 1; i < g.argv.size(); ++i) cmd.push_back(g.argv[i]);
  report["command"] = cmd;
  report["pass"] = pass;
  if (out_is_report && !g.out.empty()) io::write_file(g.out, report);
  json wrapped = {{"report", report}, {"timing", {{"seconds", seconds}}}};
  std::cout << wrapped.dump(2) << "\n";
  return pass ? kPass : kFail;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int dataset_build(const Globals& g, const std::string& family, int n, int p, int q) {
  auto t0 = std::chrono::steady_clock::now();
  Family f = parse_family(family);
  json spec = {{"family", family}};
  if (f == Family::Opq && p >= 0) {
    spec["p"] = p;
    spec["q"] = q < 0 ? p : q;
  } else {
    spec["n"] = n;
  }
  auto ds = io::dataset_from_json(spec);
  if (!g.out.empty()) io::write_file(g.out, io::to_json(*ds, true));
  json rep = {{"dataset", ds->fingerprint()}, {"dimE", ds->dimE()}, {"dimN", ds->dimN()},
              {"embed_scale", io::to_json(ds->embed_scale())}, {"g_dim", ds->g_basis().size()}};
  return emit(g, rep, since(t0), true, false);
}

int dataset_verify(const Globals& g, const std::string& file) {
  auto t0 = std::chrono::steady_clock::now();
  auto ds = io::dataset_from_json(io::read_file(file));
  std::vector<Check> checks;
  auto clo = ds->closure_failure();
  checks.push_back({"closure", !clo, clo.value_or("")});
  auto eq = ds->equivariance_failure();
  checks.push_back({"equivariance", !eq, eq.value_or("")});
  AdmissibilityCertificate cert = check_admissible(*ds);
  std::string w;
  if (cert.witness)
    w = "matrix unit (" + std::to_string(cert.witness->first) + ", " + std::to_string(cert.witness->second) +
        ") residual " + io::to_json(cert.residual).dump();
  checks.push_back({"admissible", cert.pass && !cert.witness, w});
  if (cert.eta_antisymmetric) checks.push_back({"eta_antisymmetric", *cert.eta_antisymmetric, ""});
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  json rep = {{"dataset", ds->fingerprint()}, {"checks", check_list(checks)}};
  return emit(g, rep, since(t0), pass);
}

int algebra_verify(const Globals& g, int n) {
  auto t0 = std::chrono::steady_clock::now();
  AlgebraReport r = verify_algebra(n);
  json checks = json::array();
  for (const auto& c : r.checks) {
    json x = {{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    checks.push_back(x);
  }
  json rep = {{"n", n}, {"dimension", r.dimension}, {"expected_dimension", r.expected_dimension}, {"checks", checks}};
  return emit(g, rep, since(t0), r.pass());
}

int subspace_test(const Globals& g, const std::string& file, const std::string& what) {
  auto t0 = std::chrono::steady_clock::now();
  Subspace v = io::subspace_from_json(io::read_file(file));
  json rep = {{"dataset", v.dataset().fingerprint()}, {"dim", v.dim()}, {"check", what}};
  bool value = false;
  if (what == "isotropic") {
    value = is_isotropic(v);
  } else if (what == "coisotropic") {
    value = is_coisotropic(v);
  } else if (what == "colagrangian") {
    auto r = is_colagrangian(v);
    value = r.value;
    if (value) rep["kind"] = r.kind;
  } else if (what == "lagrangian") {
    if (v.dataset().family() != Family::Exceptional)
      throw InputError("the Lagrangian test is implemented for the exceptional family");
    if (v.ambient() != Ambient::E) throw InputError("the Lagrangian test needs a subspace of E");
    if (is_isotropic(v)) {
      OrbitLabel l = normalize_lagrangian(v).label;
      value = l != OrbitLabel::NotLagrangian;
      rep["orbit"] = to_string(l);
    }
  } else {
    throw InputError("unknown check '" + what + "'");
  }
  rep["value"] = value;
  return emit(g, rep, since(t0), value);
}

int subspace_normalize(const Globals& g, const std::string& file, const std::string& with) {
  auto t0 = std::chrono::steady_clock::now();
  Subspace v = io::subspace_from_json(io::read_file(file));
  int n = v.dataset().n();
  json rep = {{"dataset", v.dataset().fingerprint()}};
  GroupWord word;
  bool pass = true;
  try {
    if (!with.empty()) {
      Subspace w = io::subspace_from_json(io::read_file(with), v.dataset_ptr());
      word = normalize_pair(v, w);
      rep["target"] = "standard pair";
    } else {
      if (v.dataset().family() != Family::Exceptional) throw InputError("normalization needs the exceptional family");
      LagrangianNormalization r = normalize_lagrangian(v);
      word = r.word;
      rep["orbit"] = to_string(r.label);
      pass = r.label != OrbitLabel::NotLagrangian;
    }
  } catch (const PreconditionError& e) {
    rep["error"] = e.what();
    return emit(g, rep, since(t0), false, false);
  }
  rep["word_length"] = word.entries.size();
  if (!g.out.empty()) io::write_file(g.out, io::to_json(word, n));
  else rep["word"] = io::to_json(word, n);
  return emit(g, rep, since(t0), pass, false);
}

int elgebra_from_lie(const Globals& g, const std::string& kfile, const std::string& f1, const std::string& f4) {
  auto t0 = std::chrono::steady_clock::now();
  LieAlg k = io::lie_from_json(io::read_file(kfile));
  Twist t = zero_twist(k.dim());
  if (!f1.empty()) t.F1 = io::form_from_json(io::read_file(f1));
  if (!f4.empty()) t.F4 = io::form_from_json(io::read_file(f4));
  Elgebra e = from_lie_twisted(k, t);
  if (!g.out.empty()) io::write_file(g.out, io::to_json(e));
  json rep = {{"dataset", e.dataset().fingerprint()},
              {"dimE", e.dim()},
              {"rank_D", rank(e.D())},
              {"twist_integrable", check_twist_integrability(k, t)}};
  if (g.out.empty()) rep["elgebra"] = io::to_json(e);
  return emit(g, rep, since(t0), true, false);
}

int elgebra_verify(const Globals& g, const std::string& file) {
  auto t0 = std::chrono::steady_clock::now();
  Elgebra e = io::elgebra_from_json(io::read_file(file));
  VerificationReport r = verify_elgebra(e);
  IdentityResult id = coordinate_bracket_identity(e);
  json rep = {{"dataset", e.dataset().fingerprint()}, {"checks", check_list(r.checks)}};
  rep["coordinate_bracket_identity"] = {{"pass", id.pass}, {"mode", id.mode}};
  if (!id.witness.empty()) rep["coordinate_bracket_identity"]["witness"] = id.witness;
  if (r.pass()) rep["dim_gE"] = quotient_gE(e).algebra.dim();
  return emit(g, rep, since(t0), r.pass() && id.pass);
}

int parallelisation_check(const Globals& g, const std::string& efile, const std::string& vfile) {
  auto t0 = std::chrono::steady_clock::now();
  Elgebra e = io::elgebra_from_json(io::read_file(efile));
  Subspace v = io::subspace_from_json(io::read_file(vfile), e.dataset_ptr());
  ParallelisationCertificate c = check_parallelisation(e, v);
  json rep = {{"dataset", e.dataset().fingerprint()}, {"certificate", io::to_json(c)}};
  return emit(g, rep, since(t0), c.pass());
}

int duality_check(const Globals& g, const std::string& efile, const std::string& f1, const std::string& f2) {
  auto t0 = std::chrono::steady_clock::now();
  Elgebra e = io::elgebra_from_json(io::read_file(efile));
  Subspace v1 = io::subspace_from_json(io::read_file(f1), e.dataset_ptr());
  Subspace v2 = io::subspace_from_json(io::read_file(f2), e.dataset_ptr());
  DualityCertificate c = duality_pair(e, v1, v2);
  json rep = {{"dataset", e.dataset().fingerprint()},
              {"first", io::to_json(c.first)},
              {"second", io::to_json(c.second)}};
  if (c.pass) {
    rep["intersection_dim"] = c.intersection_dim;
    rep["trivial_intersection"] = c.trivial_intersection;
  }
  return emit(g, rep, since(t0), c.pass);
}

int suite(const Globals& g) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOptions opt{g.quick, g.seed};
  auto results = run_suite(opt);
  json crit = json::array();
  json timing = json::object();
  bool pass = true;
  for (const auto& r : results) {
    crit.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    timing[std::to_string(r.id)] = r.seconds;
    pass = pass && r.pass;
  }
  json rep = {{"quick", g.quick}, {"seed", g.seed}, {"criteria", crit}};
  json cmd = json::array();
  for (std::size_t i = 1; i < g.argv.size(); ++i) cmd.push_back(g.argv[i]);
  rep["command"] = cmd;
  rep["pass"] = pass;
  if (!g.out.empty()) io::write_file(g.out, rep);
  for (const auto& r : results)
    std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.name << ": " << r.detail << "\n";
  std::cout << "total " << since(t0) << " s\n";
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  g.argv.assign(argv, argv + argc);
  CLI::App app{"Exact group data sets, exceptional algebras and elgebras"};
  app.require_subcommand(1);
  app.add_option("--out", g.out, "Write the JSON result to this file");
  app.add_flag("--quick", g.quick, "Restrict the suite to n <= 4");
  app.add_option("--seed", g.seed, "Seed for randomized trials");

  std::function<int()> action;
  std::string family = "exc", file, file2, file3, check, with, f1, f4;
  int n = 4, p = -1, q = -1;

  auto* ds = app.add_subcommand("dataset", "Build or verify a group data set")->require_subcommand(1);
  auto* dsb = ds->add_subcommand("build", "Build a calibrated data set");
  dsb->add_option("--family", family, "gl, opq, exc or slwedge2");
  dsb->add_option("--n", n, "Size");
  dsb->add_option("--p", p, "O(p,q) signature");
  dsb->add_option("--q", q, "O(p,q) signature");
  dsb->callback([&] { action = [&] { return dataset_build(g, family, n, p, q); }; });
  auto* dsv = ds->add_subcommand("verify", "Check closure, equivariance and admissibility");
  dsv->add_option("file", file)->required();
  dsv->callback([&] { action = [&] { return dataset_verify(g, file); }; });

  auto* alg = app.add_subcommand("algebra", "Exceptional Lie algebra")->require_subcommand(1);
  auto* algv = alg->add_subcommand("verify", "Verify the bracket and representation");
  algv->add_option("--n", n, "Size 3..6")->required();
  algv->callback([&] { action = [&] { return algebra_verify(g, n); }; });

  auto* sub = app.add_subcommand("subspace", "Subspace classification")->require_subcommand(1);
  auto* subt = sub->add_subcommand("test", "Test a property of a subspace");
  subt->add_option("file", file)->required();
  subt->add_option("--check", check, "isotropic, coisotropic, lagrangian or colagrangian")
      ->required()
      ->check(CLI::IsMember({"isotropic", "coisotropic", "lagrangian", "colagrangian"}));
  subt->callback([&] { action = [&] { return subspace_test(g, file, check); }; });
  auto* subn = sub->add_subcommand("normalize", "Word moving a Lagrangian (or a pair) to canonical form");
  subn->add_option("file", file)->required();
  subn->add_option("--with", with, "Lagrangian complement W; normalizes the pair (V, W)");
  subn->callback([&] { action = [&] { return subspace_normalize(g, file, with); }; });

  auto* el = app.add_subcommand("elgebra", "Elgebras")->require_subcommand(1);
  auto* elf = el->add_subcommand("from-lie", "Twisted elgebra on a Lie algebra");
  elf->add_option("file", file)->required();
  elf->add_option("--F1", f1, "1-form twist");
  elf->add_option("--F4", f4, "4-form twist");
  elf->callback([&] { action = [&] { return elgebra_from_lie(g, file, f1, f4); }; });
  auto* elv = el->add_subcommand("verify", "Verify the axioms");
  elv->add_option("file", file)->required();
  elv->callback([&] { action = [&] { return elgebra_verify(g, file); }; });

  auto* par = app.add_subcommand("parallelisation", "Parallelisation certificates")->require_subcommand(1);
  auto* parc = par->add_subcommand("check", "Certify (E, V)");
  parc->add_option("elgebra", file)->required();
  parc->add_option("subspace", file2)->required();
  parc->callback([&] { action = [&] { return parallelisation_check(g, file, file2); }; });

  auto* du = app.add_subcommand("duality", "Duality certificates")->require_subcommand(1);
  auto* duc = du->add_subcommand("check", "Certify (E, V1, V2)");
  duc->add_option("elgebra", file)->required();
  duc->add_option("first", file2)->required();
  duc->add_option("second", file3)->required();
  duc->callback([&] { action = [&] { return duality_check(g, file, file2, file3); }; });

  auto* su = app.add_subcommand("suite", "Run the acceptance battery");
  su->callback([&] { action = [&] { return suite(g); }; });

  for (auto* s : {ds, dsb, dsv, alg, algv, sub, subt, subn, el, elf, elv, par, parc, du, duc, su}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInput;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const CalibrationError& e) {
    std::cerr << "calibration error: " << e.what() << "\n";
    return kFail;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
