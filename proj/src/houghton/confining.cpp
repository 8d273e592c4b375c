#include "houghton/confining.hpp"

#include <algorithm>

#include "houghton/dsl.hpp"
#include "houghton/errors.hpp"
#include "houghton/norm.hpp"

namespace houghton {

const Element& Conjugation::power_of(long long p) const {
  auto it = powers_.find(p);
  if (it != powers_.end()) return it->second;
  return powers_.emplace(p, power(a_, p)).first->second;
}

Element Conjugation::apply(const Element& g, long long p) const {
  if (p == 0) return g;
  const Element& ap = power_of(p);
  const Element& am = power_of(-p);
  return compose(compose(ap, g), am);
}

namespace {

// Deterministic witness pool: small enumerated members first (so reported
// witnesses are canonical-least), then seeded random draws.
std::vector<Element> member_pool(const SubsetSpec& q, const ConfiningOptions& opts) {
  std::vector<Element> pool = q.enumerate_small(opts.pool_cap);
  std::mt19937_64 rng(opts.seed);
  for (int k = 0; k < opts.samples; ++k) {
    Element g = q.sample(rng);
    if (g.is_identity()) continue;
    pool.push_back(std::move(g));
  }
  return pool;
}

void update_least(std::optional<Element>& slot, const Element& candidate) {
  if (!slot || candidate < *slot) slot = candidate;
}

}  // namespace

nlohmann::ordered_json ConfiningReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "houghton/1";
  j["invariance_ok"] = invariance_ok;
  j["invariance_counterexample"] =
      invariance_counterexample ? nlohmann::ordered_json(format_element(*invariance_counterexample))
                                : nlohmann::ordered_json(nullptr);
  j["n0_found"] = n0_found ? nlohmann::ordered_json(*n0_found) : nlohmann::ordered_json(nullptr);
  j["n0_failing_pair"] =
      n0_failing_pair
          ? nlohmann::ordered_json::array({format_element(n0_failing_pair->first),
                                           format_element(n0_failing_pair->second)})
          : nlohmann::ordered_json(nullptr);
  j["exhaustion_ok"] = exhaustion_ok;
  j["exhaustion_counterexample"] =
      exhaustion_counterexample ? nlohmann::ordered_json(format_element(*exhaustion_counterexample))
                                : nlohmann::ordered_json(nullptr);
  j["strict_witness"] =
      strict_witness ? nlohmann::ordered_json(format_element(*strict_witness))
                     : nlohmann::ordered_json(nullptr);
  j["confining"] = confining();
  j["strictly_confining"] = strictly_confining();
  return j;
}

ConfiningReport check_confining(const SubsetSpec& q, const Conjugation& alpha,
                                const ConfiningOptions& opts) {
  ConfiningReport rep;
  std::vector<Element> pool = member_pool(q, opts);
  if (pool.empty()) throw usage_error("check_confining: sampler produced no members");

  for (const Element& g : pool) {
    if (!q.contains(alpha.apply(g))) {
      rep.invariance_ok = false;
      update_least(rep.invariance_counterexample, g);
    }
  }
  if (rep.invariance_counterexample && !q.contains(*rep.invariance_counterexample))
    throw violation_error("check_confining: counterexample fails to re-verify");

  // least n0 <= n0_max passing every sampled product
  std::vector<std::pair<Element, Element>> pairs;
  int side = std::min<int>(opts.pool_pair_side, static_cast<int>(pool.size()));
  for (int x = 0; x < side; ++x)
    for (int y = 0; y < side; ++y) pairs.push_back({pool[static_cast<size_t>(x)],
                                                    pool[static_cast<size_t>(y)]});
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ull);
  for (int k = 0; k < opts.samples; ++k) pairs.push_back({q.sample(rng), q.sample(rng)});
  for (int n0 = 0; n0 <= opts.n0_max && !rep.n0_found; ++n0) {
    bool ok = true;
    for (const auto& pr : pairs) {
      if (!q.contains(alpha.apply(compose(pr.first, pr.second), n0))) {
        ok = false;
        rep.n0_failing_pair = pr;
        break;
      }
    }
    if (ok) {
      rep.n0_found = n0;
      rep.n0_failing_pair.reset();
    }
  }

  // every sampled ambient element must have finite escape time
  SubsetSpec ambient = SubsetSpec::whole(q.arity, q.ambient);
  ambient.ambient_whole_group = q.ambient_whole_group;
  std::mt19937_64 rng2(opts.seed ^ 0xda3e39cb94b95bdbull);
  for (int k = 0; k < opts.samples; ++k) {
    Element g = ambient.sample(rng2);
    if (!escape_time(q, alpha, g, opts.esc_max)) {
      rep.exhaustion_ok = false;
      update_least(rep.exhaustion_counterexample, g);
    }
  }

  // strictness: least member of Q not hit by alpha(Q)
  for (const Element& g : pool) {
    if (g.is_identity()) continue;
    if (!q.contains(alpha.apply(g, -1))) update_least(rep.strict_witness, g);
  }
  if (rep.strict_witness &&
      (!q.contains(*rep.strict_witness) || q.contains(alpha.apply(*rep.strict_witness, -1))))
    throw violation_error("check_confining: strict witness fails to re-verify");
  return rep;
}

std::optional<long long> escape_time(const SubsetSpec& q, const Conjugation& alpha,
                                     const Element& g, long long bound) {
  Element cur = g;
  for (long long s = 0; s <= bound; ++s) {
    if (q.contains(cur)) return s;
    cur = alpha.apply(cur);
  }
  return std::nullopt;
}

UnionResult confining_union(const SubsetSpec& q, const SubsetSpec& s, const Conjugation& alpha,
                            long long diam_bound, const ConfiningOptions& opts) {
  ConfiningReport rq = check_confining(q, alpha, opts);
  if (!rq.confining())
    throw usage_error("confining_union: Q is not confining on the sample budget");

  UnionResult out;
  std::vector<Element> probes = s.enumerate_small(64);
  std::mt19937_64 rng(opts.seed ^ 0x6a09e667f3bcc909ull);
  for (int k = 0; k < std::min(opts.samples, 32); ++k) probes.push_back(s.sample(rng));

  for (const Element& m : probes) {
    if (m.is_identity()) continue;
    if (q.contains(m)) {
      out.diameter = std::max(out.diameter, 1ll);
      continue;
    }
    // bounded product search over Q-letters supported near m, with one
    // widening step to make the window self-validating
    std::optional<long long> best;
    for (Coord pad = 0; pad <= 1 && !best; ++pad) {
      Coord lo = 0, hi = 0;
      std::vector<Window::Range> extra;
      for (const auto& e : m.exceptions()) {
        auto z = point_to_z(e.first);
        if (z) {
          lo = std::min(lo, *z);
          hi = std::max(hi, *z);
        } else {
          extra.push_back({e.first.ray, 0, e.first.coord + 1});
        }
      }
      Window w = Window::z_interval(lo - 1 - pad, hi + 1 + pad);
      for (const auto& r : extra) w.add(r.ray, r.lo, r.hi);
      std::vector<RayPoint> pts = w.points(q.arity);
      std::vector<Element> letters;
      try {
        for (const auto& cand : permutations_of(q.arity, pts, 50000))
          if (q.contains(cand)) letters.push_back(cand);
      } catch (const budget_error&) {
        break;
      }
      if (letters.empty()) break;
      GeodesicSearch search(std::move(letters), 2'000'000);
      auto r = search.norm(m, diam_bound);
      if (r.length) best = r.length;
    }
    if (!best) {
      out.refutation = m;
      return out;
    }
    out.diameter = std::max(out.diameter, *best);
  }

  // The union must itself pass the sampled axioms (the enlargement lemma's
  // conclusion); a failure here means the diameter probes were too weak.
  SubsetSpec merged = SubsetSpec::union_of(q, s);
  merged.diameter = out.diameter;
  ConfiningReport ru = check_confining(merged, alpha, opts);
  if (!ru.confining())
    throw violation_error("confining_union: union fails the sampled confining axioms");
  out.merged = std::move(merged);
  return out;
}

}  // namespace houghton
