#include "houghton/certificate.hpp"

#include <map>
#include <unordered_map>

#include "houghton/errors.hpp"

namespace houghton {

ClosureCertificate ClosureCertificate::leaf_q(Element e) {
  ClosureCertificate c;
  c.kind = Kind::LeafQ;
  c.value = std::move(e);
  c.level = 0;
  return c;
}

ClosureCertificate ClosureCertificate::leaf_seed(long long i, int j) {
  ClosureCertificate c;
  c.kind = Kind::LeafSeed;
  c.seed_power = i;
  c.seed_index = j;
  c.level = 0;
  return c;
}

ClosureCertificate ClosureCertificate::node(ClosureCertificate left, ClosureCertificate right) {
  ClosureCertificate c;
  c.kind = Kind::Node;
  c.level = std::max(left.level, right.level) + 1;
  c.children.push_back(std::move(left));
  c.children.push_back(std::move(right));
  return c;
}

namespace {

Element verify_at(const ClosureCertificate& c, const SubsetSpec& q, const SeedFamily& seeds,
                  long long n0, const Conjugation& alpha, const std::string& path) {
  switch (c.kind) {
    case ClosureCertificate::Kind::LeafQ:
      if (!q.contains(c.value))
        throw violation_error("certificate leaf not in Q at " + path);
      return c.value;
    case ClosureCertificate::Kind::LeafSeed:
      if (c.seed_index < 0 || c.seed_index >= static_cast<int>(seeds.seeds.size()))
        throw violation_error("certificate seed index invalid at " + path);
      if (c.seed_power < 0)
        throw violation_error("certificate seed power negative at " + path);
      return alpha.apply(seeds.seeds[static_cast<size_t>(c.seed_index)], c.seed_power);
    case ClosureCertificate::Kind::Node: {
      if (c.children.size() != 2)
        throw violation_error("certificate node without two children at " + path);
      if (c.children[0].level > c.level - 1 || c.children[1].level > c.level - 1)
        throw violation_error("certificate level ordering violated at " + path);
      Element l = verify_at(c.children[0], q, seeds, n0, alpha, path + ".left");
      Element r = verify_at(c.children[1], q, seeds, n0, alpha, path + ".right");
      return alpha.apply(compose(l, r), n0);
    }
  }
  throw violation_error("certificate malformed at " + path);
}

struct Searcher {
  const SubsetSpec& q;
  const SeedFamily& seeds;
  long long n0;
  const Conjugation& alpha;
  const CertifyOptions& opts;
  size_t steps = 0;

  std::vector<std::pair<Element, ClosureCertificate>> base;  // level-0 pool
  std::unordered_map<Element, std::pair<int, ClosureCertificate>, ElementHash> found;
  std::map<std::pair<int, Element>, bool> failed;  // (level, subgoal) miss memo

  void build_base() {
    for (const Element& g : q.enumerate_small(static_cast<size_t>(opts.pool) / 2 + 4))
      base.push_back({g, ClosureCertificate::leaf_q(g)});
    std::mt19937_64 rng(opts.seed);
    for (int k = 0; k < opts.pool; ++k) {
      Element g = q.sample(rng);
      base.push_back({g, ClosureCertificate::leaf_q(std::move(g))});
    }
    for (int j = 0; j < static_cast<int>(seeds.seeds.size()); ++j) {
      Element cur = seeds.seeds[static_cast<size_t>(j)];
      for (long long i = 0; i <= opts.seed_power_max; ++i) {
        base.push_back({cur, ClosureCertificate::leaf_seed(i, j)});
        cur = alpha.apply(cur);
      }
    }
    std::sort(base.begin(), base.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    base.erase(std::unique(base.begin(), base.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               base.end());
    for (const auto& [g, c] : base) remember(g, c);
  }

  void remember(const Element& g, const ClosureCertificate& c) {
    auto it = found.find(g);
    if (it == found.end() || c.level < it->second.first) found[g] = {c.level, c};
  }

  std::optional<ClosureCertificate> level0(const Element& g) {
    if (q.contains(g)) return ClosureCertificate::leaf_q(g);
    for (int j = 0; j < static_cast<int>(seeds.seeds.size()); ++j) {
      Element cur = seeds.seeds[static_cast<size_t>(j)];
      for (long long i = 0; i <= opts.seed_power_max; ++i) {
        if (cur == g) return ClosureCertificate::leaf_seed(i, j);
        cur = alpha.apply(cur);
      }
    }
    return std::nullopt;
  }

  std::optional<ClosureCertificate> search(const Element& g, int level) {
    auto hit = found.find(g);
    if (hit != found.end() && hit->second.first <= level) return hit->second.second;
    if (++steps > opts.budget) throw budget_error("closure_certify budget exhausted");
    if (level == 0) {
      auto c = level0(g);
      if (c) remember(g, *c);
      return c;
    }
    auto miss = failed.find({level, g});
    if (miss != failed.end()) return std::nullopt;
    if (auto c = search(g, level - 1)) return c;
    Element h = alpha.apply(g, -n0);
    for (const auto& [l, lc] : base) {
      Element r = compose(inverse(l), h);
      if (auto rc = search(r, level - 1)) {
        ClosureCertificate c = ClosureCertificate::node(lc, *rc);
        c.level = level;
        remember(g, c);
        return c;
      }
    }
    for (const auto& [r, rc] : base) {
      Element l = compose(h, inverse(r));
      if (auto lc = search(l, level - 1)) {
        ClosureCertificate c = ClosureCertificate::node(*lc, rc);
        c.level = level;
        remember(g, c);
        return c;
      }
    }
    failed[{level, g}] = true;
    return std::nullopt;
  }
};

}  // namespace

Element verify_certificate(const ClosureCertificate& c, const SubsetSpec& q,
                           const SeedFamily& seeds, long long n0, const Conjugation& alpha) {
  if (n0 < 0) throw usage_error("verify_certificate: n0 must be >= 0");
  return verify_at(c, q, seeds, n0, alpha, "root");
}

std::optional<ClosureCertificate> closure_certify(const Element& g, const SubsetSpec& q,
                                                  const SeedFamily& seeds, long long n0,
                                                  const Conjugation& alpha,
                                                  const CertifyOptions& opts) {
  if (seeds.K < 1) throw usage_error("closure_certify: K must be >= 1");
  for (size_t j = 0; j < seeds.seeds.size(); ++j)
    if (!q.contains(alpha.apply(seeds.seeds[j], seeds.K)))
      throw violation_error("closure_certify: alpha^K(f_" + std::to_string(j) + ") not in Q");
  Searcher s{q, seeds, n0, alpha, opts, 0, {}, {}, {}};
  s.build_base();
  try {
    for (int level = 0; level <= opts.depth; ++level)
      if (auto c = s.search(g, level)) return c;
  } catch (const budget_error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace houghton
