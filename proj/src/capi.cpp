#include "houghton/houghton.h"

#include <cstring>
#include <string>

#include "houghton/certificate.hpp"
#include "houghton/confining.hpp"
#include "houghton/dsl.hpp"
#include "houghton/element.hpp"
#include "houghton/errors.hpp"
#include "houghton/json_io.hpp"
#include "houghton/norm.hpp"
#include "houghton/poset.hpp"
#include "houghton/subsets.hpp"
#include "houghton/witness_ops.hpp"
#include "json.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

struct houghton_elem {
  houghton::Element value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
houghton_status guarded(Fn&& fn) {
  try {
    fn();
    return HOUGHTON_OK;
  } catch (const houghton::usage_error& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_USAGE;
  } catch (const houghton::violation_error& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_VIOLATION;
  } catch (const houghton::budget_error& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_INTERNAL;
  }
}

houghton::SubsetSpec build_subset(int arity, const std::string& ambient,
                                  const std::string& subset) {
  houghton::SubsetSpec q;
  if (ambient == "hn") {
    q = houghton::SubsetSpec::whole(arity, houghton::SubsetTag::syminf());
    q.ambient_whole_group = true;
  } else {
    q = houghton::SubsetSpec::whole(arity, houghton::SubsetTag::parse(ambient));
  }
  if (!subset.empty() && subset != "all")
    q.tags.push_back(houghton::SubsetTag::parse(subset));
  return q;
}

houghton::Element parse_field(const json& args, const char* field, int arity) {
  if (!args.contains(field))
    throw houghton::usage_error(std::string("witness args missing field '") + field + "'");
  return houghton::parse_element(args.at(field).get<std::string>(), arity);
}

ordered_json witness_dispatch(const std::string& kind, const json& args) {
  int arity = args.value("arity", 2);
  ordered_json out;
  out["schema"] = "houghton/1";
  out["op"] = kind;
  if (kind == "pi") {
    houghton::Element gamma = parse_field(args, "gamma", arity);
    long long m = args.at("m").get<long long>();
    long long k = args.at("k").get<long long>();
    int p = args.at("p").get<int>();
    houghton::Element r = houghton::pi_product(gamma, m, k, p);
    out["result"] = houghton::format_element(r);
    out["image_at_minus_m"] = r.z_apply(-m);
  } else if (kind == "omega") {
    houghton::Element pi = parse_field(args, "pi", arity);
    long long m = args.at("m").get<long long>();
    long long k = args.at("k").get<long long>();
    int p = args.at("p").get<int>();
    houghton::Element r = houghton::omega_product(pi, m, k, p);
    out["result"] = houghton::format_element(r);
    out["image_at_minus_m"] = r.z_apply(-m);
  } else if (kind == "munu") {
    houghton::Element alpha = parse_field(args, "alpha", arity);
    houghton::Element beta = parse_field(args, "beta", arity);
    long long n = args.at("level").get<long long>();
    long long n0 = args.value("n0", 0ll);
    auto r = houghton::mu_nu(alpha, beta, n, n0);
    out["mu"] = houghton::format_element(r.mu);
    out["nu"] = houghton::format_element(r.nu);
  } else if (kind == "swap") {
    houghton::Element mu = parse_field(args, "mu", arity);
    houghton::Element nu = parse_field(args, "nu", arity);
    long long n = args.at("level").get<long long>();
    long long n0 = args.value("n0", 0ll);
    houghton::Element r = houghton::sigma_swap(mu, nu, n, n0);
    out["result"] = houghton::format_element(r);
  } else if (kind == "fixing") {
    long long n = args.at("level").get<long long>();
    long long i = args.at("i").get<long long>();
    long long n0 = args.value("n0", 0ll);
    std::string provider = args.value("provider", "pipeline");
    houghton::SwapProvider fn;
    if (provider == "swaps") {
      fn = [arity](long long m) {
        return houghton::Element::from_z_cycles(arity, {{-m, -m + 1}});
      };
    } else if (provider == "pipeline") {
      if (n0 != 0)
        throw houghton::usage_error("fixing: the pipeline provider runs at n0 = 0");
      fn = [arity](long long m) {
        houghton::Element eta = houghton::Element::from_z_cycles(arity, {{-m, 0, 1}});
        auto mn = houghton::mu_nu(eta, houghton::compose(eta, eta), m, 0);
        return houghton::sigma_swap(mn.mu, mn.nu, m, 0);
      };
    } else {
      throw houghton::usage_error("fixing: unknown provider '" + provider + "'");
    }
    houghton::Element r = houghton::sigma_swap_fixing(fn, n, i, n0);
    out["result"] = houghton::format_element(r);
  } else if (kind == "decompose") {
    houghton::Element xi = parse_field(args, "xi", arity);
    int i = args.at("i").get<int>();
    int j = args.at("j").get<int>();
    auto r = houghton::decompose_two_rays(xi, i, j);
    out["f1"] = houghton::format_element(r.f1);
    out["s"] = houghton::format_element(r.s);
    out["f2"] = houghton::format_element(r.f2);
  } else if (kind == "retract") {
    houghton::Element h = parse_field(args, "h", arity);
    int i = args.at("i").get<int>();
    int j = args.at("j").get<int>();
    out["result"] = houghton::format_element(houghton::retract_to_partial(h, i, j));
  } else if (kind == "fixfactor") {
    houghton::Element g = parse_field(args, "g", arity);
    int i = args.at("i").get<int>();
    auto r = houghton::fix_ray_factor(g, i);
    out["sigma"] = houghton::format_element(r.sigma);
    out["word"] = r.word_dsl();
  } else {
    throw houghton::usage_error("unknown witness op '" + kind + "'");
  }
  return out;
}

}  // namespace

extern "C" {

const char* houghton_schema(void) { return "houghton/1"; }
const char* houghton_last_error(void) { return g_last_error.c_str(); }
void houghton_string_free(char* s) { std::free(s); }
void houghton_elem_free(houghton_elem* e) { delete e; }

houghton_status houghton_elem_parse(const char* dsl, int arity, houghton_elem** out) {
  return guarded([&] { *out = new houghton_elem{houghton::parse_element(dsl, arity)}; });
}

houghton_status houghton_elem_from_json(const char* text, houghton_elem** out) {
  return guarded([&] { *out = new houghton_elem{houghton::element_from_json_text(text)}; });
}

houghton_status houghton_elem_format(const houghton_elem* e, char** out) {
  return guarded([&] { *out = dup_string(houghton::format_element(e->value)); });
}

houghton_status houghton_elem_to_json(const houghton_elem* e, char** out) {
  return guarded([&] { *out = dup_string(houghton::element_to_json(e->value).dump()); });
}

int houghton_elem_arity(const houghton_elem* e) { return e->value.arity(); }

int houghton_elem_equal(const houghton_elem* a, const houghton_elem* b) {
  return a->value == b->value ? 1 : 0;
}

houghton_status houghton_elem_compose(const houghton_elem* a, const houghton_elem* b,
                                      houghton_elem** out) {
  return guarded([&] { *out = new houghton_elem{houghton::compose(a->value, b->value)}; });
}

houghton_status houghton_elem_inverse(const houghton_elem* a, houghton_elem** out) {
  return guarded([&] { *out = new houghton_elem{houghton::inverse(a->value)}; });
}

houghton_status houghton_elem_apply(const houghton_elem* e, int ray, int64_t coord,
                                    int* ray_out, int64_t* coord_out) {
  return guarded([&] {
    houghton::RayPoint q = e->value.apply({ray, coord});
    *ray_out = q.ray;
    *coord_out = q.coord;
  });
}

houghton_status houghton_elem_lambda(const houghton_elem* e, int64_t* lambda_out) {
  return guarded([&] {
    const auto& v = e->value.lambda_vec();
    for (size_t k = 0; k < v.size(); ++k) lambda_out[k] = v[k];
  });
}

houghton_status houghton_elem_member(const houghton_elem* e, const char* tag, int* out) {
  return guarded(
      [&] { *out = houghton::member(e->value, houghton::SubsetTag::parse(tag)) ? 1 : 0; });
}

houghton_status houghton_elem_conj_t(const houghton_elem* e, int64_t s, houghton_elem** out) {
  return guarded([&] { *out = new houghton_elem{houghton::conj_by_t(e->value, s)}; });
}

houghton_status houghton_norm_formula(const houghton_elem* e, int64_t* out) {
  return guarded([&] { *out = houghton::norm_fix_t(e->value); });
}

houghton_status houghton_norm_bfs(const houghton_elem* e, int64_t window, int64_t max_len,
                                  int want_witness, char** json_out) {
  return guarded([&] {
    ordered_json j;
    j["schema"] = "houghton/1";
    houghton::BfsOptions opts;
    opts.want_witness = want_witness != 0;
    if (window < 0) {
      auto r = houghton::stabilized_norm(e->value, opts);
      if (r.budget_exceeded) throw houghton::budget_error("norm oracle budget exceeded");
      j["length"] = r.length ? ordered_json(*r.length) : ordered_json("exceeds");
      j["window"] = r.window_used;
      if (opts.want_witness && r.length) {
        houghton::AlphabetSpec a =
            houghton::fix_t_alphabet(e->value.arity(), r.window_used, &e->value);
        auto wr = houghton::bfs_norm(e->value, a, *r.length, opts);
        auto w = ordered_json::array();
        for (const auto& l : wr.witness) w.push_back(houghton::format_element(l));
        j["witness"] = std::move(w);
      }
    } else {
      long long cap = max_len >= 0 ? max_len : houghton::norm_fix_t(e->value);
      houghton::AlphabetSpec a = houghton::fix_t_alphabet(e->value.arity(), window, &e->value);
      auto r = houghton::bfs_norm(e->value, a, cap, opts);
      if (r.budget_exceeded) throw houghton::budget_error("norm search budget exceeded");
      j["length"] = r.length ? ordered_json(*r.length) : ordered_json("exceeds");
      auto w = ordered_json::array();
      for (const auto& l : r.witness) w.push_back(houghton::format_element(l));
      j["witness"] = std::move(w);
    }
    *json_out = dup_string(j.dump());
  });
}

houghton_status houghton_confine_check(int arity, const char* ambient, const char* subset,
                                       const char* auto_dsl, int samples, uint64_t seed,
                                       int n0_max, int64_t esc_max, int* verdict,
                                       char** json_out) {
  return guarded([&] {
    houghton::SubsetSpec q = build_subset(arity, ambient, subset);
    houghton::Conjugation alpha(houghton::parse_element(auto_dsl, arity));
    houghton::ConfiningOptions opts;
    opts.samples = samples;
    opts.seed = seed;
    opts.n0_max = n0_max;
    opts.esc_max = esc_max;
    houghton::ConfiningReport rep = houghton::check_confining(q, alpha, opts);
    ordered_json j = rep.to_json();
    j["subset"] = q.label();
    j["auto"] = houghton::format_element(alpha.by());
    *verdict = rep.confining() ? 1 : 0;
    *json_out = dup_string(j.dump());
  });
}

houghton_status houghton_witness_run(const char* kind, const char* json_args, char** json_out) {
  try {
    json args = json::parse(json_args);
    ordered_json out = witness_dispatch(kind, args);
    *json_out = dup_string(out.dump());
    return HOUGHTON_OK;
  } catch (const houghton::violation_error& e) {
    g_last_error = e.what();
    ordered_json out;
    out["schema"] = "houghton/1";
    out["error"] = "violation";
    out["message"] = e.what();
    if (!e.detail_json.empty()) out["detail"] = e.detail_json;
    *json_out = dup_string(out.dump());
    return HOUGHTON_ERR_VIOLATION;
  } catch (const houghton::usage_error& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_USAGE;
  } catch (const houghton::budget_error& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_BUDGET;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HOUGHTON_ERR_INTERNAL;
  }
}

houghton_status houghton_poset_emit(int n, const char* perms, int lineal_sample, uint64_t seed,
                                    const char* format, char** out) {
  return guarded([&] {
    houghton::PermGroup g(n);
    std::string text = perms ? perms : "";
    size_t pos = 0;
    while (pos < text.size()) {
      size_t next = text.find(';', pos);
      if (next == std::string::npos) next = text.size();
      std::string one = text.substr(pos, next - pos);
      if (one.find_first_not_of(" \t") != std::string::npos)
        g.add_generator(houghton::PermGroup::parse_perm(n, one));
      pos = next + 1;
    }
    houghton::Poset poset = houghton::emit_poset(n, g, lineal_sample, seed);
    std::string fmt = format ? format : "json";
    if (fmt == "dot")
      *out = dup_string(poset.dot());
    else if (fmt == "json")
      *out = dup_string(poset.json().dump(2) + "\n");
    else
      throw houghton::usage_error("poset format must be dot or json");
  });
}

}  // extern "C"
