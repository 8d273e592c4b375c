// Batch front end for the Houghton toolkit. Talks to the core exclusively
// through the C API in houghton/houghton.h; exit codes: 0 success/verified,
// 1 counterexample or postcondition violation, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "houghton/houghton.h"
#include "json.hpp"

namespace {

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { houghton_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OwnedElem {
  houghton_elem* p = nullptr;
  ~OwnedElem() { houghton_elem_free(p); }
};

int fail(houghton_status st) {
  std::cerr << "error: " << houghton_last_error() << "\n";
  switch (st) {
    case HOUGHTON_ERR_USAGE:
      return 2;
    case HOUGHTON_ERR_VIOLATION:
      return 1;
    default:
      return 2;
  }
}

int run_elem(int arity, const std::string& expr, const std::string& format) {
  OwnedElem e;
  houghton_status st = houghton_elem_parse(expr.c_str(), arity, &e.p);
  if (st != HOUGHTON_OK) return fail(st);
  if (format == "text") {
    OwnedString s;
    houghton_elem_format(e.p, &s.p);
    std::cout << s.str() << "\n";
  } else {
    OwnedString s;
    houghton_elem_to_json(e.p, &s.p);
    std::cout << s.str() << "\n";
  }
  return 0;
}

int run_norm(int arity, const std::string& expr, const std::string& mode, int64_t window,
             int64_t max_len, bool witness) {
  OwnedElem e;
  houghton_status st = houghton_elem_parse(expr.c_str(), arity, &e.p);
  if (st != HOUGHTON_OK) return fail(st);
  if (mode == "formula") {
    int64_t len = 0;
    st = houghton_norm_formula(e.p, &len);
    if (st != HOUGHTON_OK) return fail(st);
    nlohmann::ordered_json j;
    j["schema"] = houghton_schema();
    j["length"] = len;
    std::cout << j.dump() << "\n";
    return 0;
  }
  OwnedString out;
  st = houghton_norm_bfs(e.p, window, max_len, witness ? 1 : 0, &out.p);
  if (st != HOUGHTON_OK) return fail(st);
  std::cout << out.str() << "\n";
  return 0;
}

int run_confine(int arity, const std::string& ambient, const std::string& subset,
                const std::string& auto_dsl, int samples, uint64_t seed, int n0_max,
                int64_t esc_max) {
  OwnedString out;
  int verdict = 0;
  houghton_status st =
      houghton_confine_check(arity, ambient.c_str(), subset.c_str(), auto_dsl.c_str(), samples,
                             seed, n0_max, esc_max, &verdict, &out.p);
  if (st != HOUGHTON_OK) return fail(st);
  std::cout << out.str() << "\n";
  return verdict ? 0 : 1;
}

int run_witness(const std::string& kind, const nlohmann::ordered_json& args) {
  OwnedString out;
  houghton_status st = houghton_witness_run(kind.c_str(), args.dump().c_str(), &out.p);
  if (st == HOUGHTON_OK || (st == HOUGHTON_ERR_VIOLATION && out.p)) {
    std::cout << out.str() << "\n";
    return st == HOUGHTON_OK ? 0 : 1;
  }
  return fail(st);
}

int run_poset(int n, const std::string& perms, int sample, uint64_t seed,
              const std::string& format) {
  OwnedString out;
  houghton_status st =
      houghton_poset_emit(n, perms.c_str(), sample, seed, format.c_str(), &out.p);
  if (st != HOUGHTON_OK) return fail(st);
  std::cout << out.str();
  if (format == "dot") std::cout.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in Houghton groups"};
  app.require_subcommand(1);

  // elem eval
  auto* elem = app.add_subcommand("elem", "element arithmetic");
  auto* eval = elem->add_subcommand("eval", "evaluate a DSL expression");
  int e_arity = 2;
  std::string e_expr, e_format = "json";
  eval->add_option("--n", e_arity, "arity");
  eval->add_option("expr", e_expr, "element expression")->required();
  eval->add_option("--format", e_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  // norm
  auto* norm = app.add_subcommand("norm", "word norms over Fix(R_1) ∪ {t}");
  int n_arity = 2;
  std::string n_mode = "formula", n_expr;
  int64_t n_window = -1, n_maxlen = -1;
  bool n_witness = false;
  norm->add_option("--mode", n_mode, "formula|bfs")->check(CLI::IsMember({"formula", "bfs"}));
  norm->add_option("--n", n_arity, "arity");
  norm->add_option("--elem", n_expr, "element expression")->required();
  norm->add_option("--window", n_window, "family window 0..W (default: widen until stable)");
  norm->add_option("--max-len", n_maxlen, "search bound (default: formula bound)");
  norm->add_flag("--witness", n_witness, "also return a geodesic witness word");

  // confine check
  auto* confine = app.add_subcommand("confine", "confining-automorphism checks");
  auto* check = confine->add_subcommand("check", "sampled axiom check with witnesses");
  int c_arity = 2, c_samples = 200, c_n0max = 4;
  int64_t c_escmax = 64;
  uint64_t c_seed = 0;
  std::string c_ambient = "syminf", c_subset = "all", c_auto = "t[1,2]";
  check->add_option("--n", c_arity, "arity");
  check->add_option("--ambient", c_ambient, "syminf|hn|ker:i|partial:...");
  check->add_option("--subset", c_subset, "predicate tag, e.g. fix:1");
  check->add_option("--auto", c_auto, "conjugating element (DSL)");
  check->add_option("--samples", c_samples, "sample count");
  check->add_option("--seed", c_seed, "sampler seed");
  check->add_option("--n0-max", c_n0max, "largest n0 to try");
  check->add_option("--esc-max", c_escmax, "escape-time bound");

  // witness ops
  auto* witness = app.add_subcommand("witness", "constructive permutation combinators");
  int w_arity = 2, w_i = 1, w_j = 2, w_p = 1;
  long long w_m = 2, w_k = 1, w_level = 2, w_n0 = 0, w_fix_i = 0;
  std::string w_gamma, w_pi, w_alpha, w_beta, w_mu, w_nu, w_xi, w_h, w_g;
  std::string w_provider = "pipeline";

  auto* wpi = witness->add_subcommand("pi", "shifted-product combinator");
  wpi->add_option("--n", w_arity);
  wpi->add_option("--gamma", w_gamma)->required();
  wpi->add_option("--m", w_m)->required();
  wpi->add_option("--k", w_k)->required();
  wpi->add_option("--p", w_p)->required();

  auto* womega = witness->add_subcommand("omega", "inverse-side shifted product");
  womega->add_option("--n", w_arity);
  womega->add_option("--pi", w_pi)->required();
  womega->add_option("--m", w_m)->required();
  womega->add_option("--k", w_k)->required();
  womega->add_option("--p", w_p)->required();

  auto* wmunu = witness->add_subcommand("munu", "commuting pair builder");
  wmunu->add_option("--n", w_arity);
  wmunu->add_option("--alpha", w_alpha)->required();
  wmunu->add_option("--beta", w_beta)->required();
  wmunu->add_option("--level", w_level)->required();
  wmunu->add_option("--n0", w_n0);

  auto* wswap = witness->add_subcommand("swap", "adjacent swap from a munu pair");
  wswap->add_option("--n", w_arity);
  wswap->add_option("--mu", w_mu)->required();
  wswap->add_option("--nu", w_nu)->required();
  wswap->add_option("--level", w_level)->required();
  wswap->add_option("--n0", w_n0);

  auto* wfixing = witness->add_subcommand("fixing", "swap fixing a prescribed block");
  wfixing->add_option("--n", w_arity);
  wfixing->add_option("--level", w_level)->required();
  wfixing->add_option("--i", w_fix_i)->required();
  wfixing->add_option("--n0", w_n0);
  wfixing->add_option("--provider", w_provider, "pipeline|swaps");

  auto* wdec = witness->add_subcommand("decompose", "Fix(R_i)·Sym(R_i ∪ R_j)·Fix(R_i) factors");
  wdec->add_option("--n", w_arity);
  wdec->add_option("--xi", w_xi)->required();
  wdec->add_option("--i", w_i);
  wdec->add_option("--j", w_j);

  auto* wret = witness->add_subcommand("retract", "retraction onto H_n({i,j})");
  wret->add_option("--n", w_arity);
  wret->add_option("--h", w_h)->required();
  wret->add_option("--i", w_i);
  wret->add_option("--j", w_j);

  auto* wfix = witness->add_subcommand("fixfactor", "Fix(R_i) = Fix_inf(R_i)·<t_{r,s}>");
  wfix->add_option("--n", w_arity);
  wfix->add_option("--g", w_g)->required();
  wfix->add_option("--i", w_i);

  // poset
  auto* poset = app.add_subcommand("poset", "hyperbolic-structure poset emission");
  int p_n = 2, p_sample = 0;
  uint64_t p_seed = 0;
  std::string p_format = "json";
  std::vector<std::string> p_perms;
  poset->add_option("--n", p_n, "number of rays")->required();
  poset->add_option("--perm", p_perms, "generator in cycle notation (repeatable)");
  poset->add_option("--lineal-sample", p_sample, "extra sampled lineal classes (n >= 3)");
  poset->add_option("--seed", p_seed, "sampling seed");
  poset->add_option("--format", p_format, "dot|json")->check(CLI::IsMember({"dot", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (eval->parsed()) return run_elem(e_arity, e_expr, e_format);
  if (norm->parsed()) return run_norm(n_arity, n_expr, n_mode, n_window, n_maxlen, n_witness);
  if (check->parsed())
    return run_confine(c_arity, c_ambient, c_subset, c_auto, c_samples, c_seed, c_n0max,
                       c_escmax);
  if (witness->parsed()) {
    nlohmann::ordered_json args;
    args["arity"] = w_arity;
    if (wpi->parsed()) {
      args["gamma"] = w_gamma;
      args["m"] = w_m;
      args["k"] = w_k;
      args["p"] = w_p;
      return run_witness("pi", args);
    }
    if (womega->parsed()) {
      args["pi"] = w_pi;
      args["m"] = w_m;
      args["k"] = w_k;
      args["p"] = w_p;
      return run_witness("omega", args);
    }
    if (wmunu->parsed()) {
      args["alpha"] = w_alpha;
      args["beta"] = w_beta;
      args["level"] = w_level;
      args["n0"] = w_n0;
      return run_witness("munu", args);
    }
    if (wswap->parsed()) {
      args["mu"] = w_mu;
      args["nu"] = w_nu;
      args["level"] = w_level;
      args["n0"] = w_n0;
      return run_witness("swap", args);
    }
    if (wfixing->parsed()) {
      args["level"] = w_level;
      args["i"] = w_fix_i;
      args["n0"] = w_n0;
      args["provider"] = w_provider;
      return run_witness("fixing", args);
    }
    if (wdec->parsed()) {
      args["xi"] = w_xi;
      args["i"] = w_i;
      args["j"] = w_j;
      return run_witness("decompose", args);
    }
    if (wret->parsed()) {
      args["h"] = w_h;
      args["i"] = w_i;
      args["j"] = w_j;
      return run_witness("retract", args);
    }
    if (wfix->parsed()) {
      args["g"] = w_g;
      args["i"] = w_i;
      return run_witness("fixfactor", args);
    }
    std::cerr << "error: witness needs a sub-operation\n";
    return 2;
  }
  if (poset->parsed()) {
    std::string joined;
    for (size_t k = 0; k < p_perms.size(); ++k) joined += (k ? ";" : "") + p_perms[k];
    return run_poset(p_n, joined, p_sample, p_seed, p_format);
  }
  return 2;
}
