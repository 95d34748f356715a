#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "derkit/curve_io.hpp"
#include "derkit/projection.hpp"
#include "derkit/suite.hpp"

namespace {

using namespace derkit;

struct InputOptions {
  std::string path;
  std::string family;
  int n = 0;
  int r = 0;
  long long characteristic = -1;  // -1: pick per family / default 32003
  std::string plane_poly;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DERKIT_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyCurve load_input(const InputOptions& in) {
  if (!in.path.empty()) {
    FamilyCurve fam;
    fam.spec = parse_curve_file(read_file(in.path));
    if (fam.spec.name.empty()) fam.spec.name = in.path;
    return fam;
  }
  if (in.family == "rnc") {
    long long p = in.characteristic >= 0 ? in.characteristic : 32003;
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    if (in.n < 2) throw std::runtime_error("--family rnc needs --n >= 2");
    return family_rational_normal(in.n, f);
  }
  if (in.family == "beauty") {
    if (in.n < 3 || in.r < 1) throw std::runtime_error("--family beauty needs --n >= 3 --r >= 1");
    long long p = in.characteristic >= 0 ? in.characteristic
                                         : suitable_prime_for_root_count(std::max(in.r, 2));
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    return family_beauty(in.n, in.r, f);
  }
  if (in.family == "nodal_cubic" || in.family == "cuspidal_cubic" || in.family == "triangle") {
    long long p = in.characteristic >= 0 ? in.characteristic : 32003;
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    if (in.family == "nodal_cubic") return nodal_cubic(f);
    if (in.family == "cuspidal_cubic") return cuspidal_cubic(f);
    return triangle_cubic(f);
  }
  if (in.family == "fermat") {
    long long p = in.characteristic >= 0 ? in.characteristic : 32003;
    Field f = p == 0 ? Field::rationals() : Field::prime(p);
    if (in.n < 1) throw std::runtime_error("--family fermat needs --n (the degree)");
    return fermat_plane(in.n, f);
  }
  throw std::runtime_error("unknown family '" + in.family +
                           "' (known: rnc, beauty, fermat, nodal_cubic, cuspidal_cubic, triangle)");
}

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "curve description file");
  cmd->add_option("--family", in.family, "built-in family (rnc, beauty, fermat, ...)");
  cmd->add_option("--n", in.n, "family parameter n");
  cmd->add_option("--r", in.r, "family parameter r");
  cmd->add_option("--char", in.characteristic, "field characteristic (0 = rationals)");
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(out_path);
    out << text;
  }
}

std::string invariant_text(const InvariantReport& inv) {
  std::ostringstream os;
  os << "curve: " << inv.curve << "\n";
  os << "ambient variables: " << inv.nvars << "  (char " << inv.char_p << ")\n";
  os << "d = " << inv.d << ", dim R = " << inv.dim << ", p_a = " << inv.p_a << "\n";
  os << "a(R) = " << inv.a_R << ", reg = " << inv.reg << "\n";
  os << "ACM: " << (inv.acm ? "yes" : "no") << ", Gorenstein: " << (inv.gorenstein ? "yes" : "no")
     << ", type r(R) = " << inv.cm_type << ", CI: " << (inv.complete_intersection ? "yes" : "no")
     << "\n";
  os << "smooth: " << (inv.smooth ? "yes" : "no") << "\n";
  if (inv.e_mod_jac)
    os << "e(R/J_R) = " << inv.e_mod_jac->value << "  [" << inv.e_mod_jac->route << "]\n";
  if (inv.tau) os << "tau = " << inv.tau->value << "  [" << inv.tau->route << "]\n";
  if (inv.nsing) os << "|Sing| (supplied) = " << *inv.nsing << "\n";
  if (inv.lmult) os << "Lmult(R/J_R) = " << inv.lmult->value << "  [" << inv.lmult->route << "]\n";
  if (inv.sigma) os << "sigma = " << inv.sigma->value << "  [" << inv.sigma->route << "]\n";
  if (inv.p_g) os << "p_g = " << inv.p_g->value << "  [" << inv.p_g->route << "]\n";
  if (inv.indeg_der) os << "indeg(Der/R eps) = " << *inv.indeg_der << "\n";
  if (inv.findeg_der && inv.findeg_der->determined) {
    os << "findeg(Der/R eps) = " << inv.findeg_der->value << "  ["
       << (inv.findeg_der->exact ? "exact" : "probabilistic") << "; vector-field degree "
       << inv.findeg_der->value + 1 << "]\n";
  }
  if (inv.mu_der) os << "mu(Der/R eps) = " << *inv.mu_der << "\n";
  return os.str();
}

int run_check(const FamilyCurve& fam, const CheckOptions& opts, const std::string& format,
              const std::string& out_path) {
  CheckResult res = check_family(fam, opts);
  if (format == "json") {
    write_output(out_path, reports_to_json(res));
  } else {
    std::ostringstream os;
    os << invariant_text(res.invariants) << "\n";
    for (const auto& r : res.reports) os << r.one_line() << "\n";
    os << (res.all_applicable_hold ? "all applicable bounds hold"
                                   : "SOME APPLICABLE BOUND FAILED")
       << "\n";
    write_output(out_path, os.str());
  }
  return res.all_applicable_hold ? 0 : 1;
}

int run_builtin_suite(std::uint64_t seed, const std::string& format, const std::string& out_path) {
  std::ostringstream os;
  bool ok = true;
  auto entries = builtin_suite(seed);
  for (const auto& entry : entries) {
    CheckOptions opts;
    opts.seed = seed;
    opts.with_projection = entry.with_projection;
    CheckResult res = check_family(entry.fam, opts);
    ok = ok && res.all_applicable_hold;
    if (format == "json") {
      os << reports_to_json(res) << "\n";
    } else {
      os << "== " << entry.fam.spec.name << " ==\n";
      for (const auto& r : res.reports) os << r.one_line() << "\n";
      os << "\n";
    }
  }
  if (format != "json")
    os << (ok ? "suite: every applicable bound holds\n" : "suite: FAILURES PRESENT\n");
  write_output(out_path, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded derivation-module and degree-bound toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  InputOptions in_inv, in_der, in_chk, in_res, in_fam;
  std::string format = "text", out_path;
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "seed recorded in every report");
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* c_inv = app.add_subcommand("invariants", "curve invariants with provenance");
  add_input_flags(c_inv, in_inv);

  auto* c_der = app.add_subcommand("derivations", "derivation module summary");
  add_input_flags(c_der, in_der);

  auto* c_chk = app.add_subcommand("check", "evaluate degree bounds");
  add_input_flags(c_chk, in_chk);
  std::string theorems, suite;
  bool all = false, with_projection = false;
  c_chk->add_option("--theorems", theorems, "comma-separated theorem ids");
  c_chk->add_flag("--all", all, "evaluate every theorem");
  c_chk->add_flag("--projection", with_projection, "include the projection sandwich");
  c_chk->add_option("--suite", suite, "run a named battery (paper)");

  auto* c_res = app.add_subcommand("resolution", "Betti table of the coordinate ring");
  add_input_flags(c_res, in_res);

  auto* c_fam = app.add_subcommand("family", "materialize a family curve description");
  add_input_flags(c_fam, in_fam);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_inv->parsed()) {
      FamilyCurve fam = load_input(in_inv);
      CheckOptions opts;
      opts.seed = seed;
      CheckResult res = check_family(fam, opts);
      if (format == "json") {
        CheckResult only = res;
        only.reports.clear();
        write_output(out_path, reports_to_json(only));
      } else {
        write_output(out_path, invariant_text(res.invariants));
      }
      return 0;
    }
    if (c_der->parsed()) {
      FamilyCurve fam = load_input(in_der);
      CurveAnalysis an = analyze_curve(fam.spec);
      DerivationModule der = derivation_module(an, seed);
      std::ostringstream os;
      os << "curve: " << fam.spec.name << "\n";
      os << "Der_k(R): " << der.der.ngens() << " minimal generators, degrees";
      for (long long d : der.der_gen_degrees) os << " " << d;
      os << "\n";
      os << "Der_k(R)/R eps: mu = " << der.mu;
      if (der.indeg) os << ", indeg = " << *der.indeg;
      if (der.findeg.determined)
        os << ", findeg = " << der.findeg.value << " ["
           << (der.findeg.exact ? "exact" : "probabilistic") << "]";
      os << "\n";
      if (der.findeg.determined)
        os << "least invariant vector-field degree: " << der.findeg.value + 1 << "\n";
      write_output(out_path, os.str());
      return 0;
    }
    if (c_chk->parsed()) {
      if (suite == "paper") return run_builtin_suite(seed, format, out_path);
      if (!suite.empty()) throw std::runtime_error("unknown suite '" + suite + "'");
      FamilyCurve fam = load_input(in_chk);
      CheckOptions opts;
      opts.seed = seed;
      opts.with_projection = with_projection;
      if (!all && !theorems.empty()) {
        std::stringstream ss(theorems);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          auto id = theorem_from_name(tok);
          if (!id) throw std::runtime_error("unknown theorem id '" + tok + "'");
          opts.ids.push_back(*id);
        }
      }
      return run_check(fam, opts, format, out_path);
    }
    if (c_res->parsed()) {
      FamilyCurve fam = load_input(in_res);
      CurveAnalysis an = analyze_curve(fam.spec);
      std::ostringstream os;
      os << "minimal free resolution shifts (F0 = ring):\n" << an.res.betti_string();
      os << "reg = " << an.reg << ", pd = " << an.res.length() << ", a(R) = " << an.a_inv << "\n";
      write_output(out_path, os.str());
      return 0;
    }
    if (c_fam->parsed()) {
      FamilyCurve fam = load_input(in_fam);
      write_output(out_path, write_curve_file(fam.spec));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
