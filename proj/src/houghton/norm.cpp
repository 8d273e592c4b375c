#include "houghton/norm.hpp"

#include <algorithm>
#include <unordered_map>

#include "houghton/errors.hpp"

namespace houghton {

long long k_of(const Element& sigma) {
  if (!sigma.finitely_supported()) throw usage_error("k_of: element is not finitely supported");
  long long k = 0;
  for (const auto& e : sigma.exceptions())
    if (e.first.ray == 1) k = std::max(k, e.first.coord + 1);
  return k;
}

long long norm_fix_t(const Element& sigma) {
  if (sigma.is_identity()) return 0;
  return 1 + 2 * k_of(sigma);
}

std::vector<Element> AlphabetSpec::enumerate(int arity, size_t max_letters) const {
  std::vector<Element> out;
  auto push = [&](const Element& g) {
    if (g.is_identity()) return;
    if (std::find(out.begin(), out.end(), g) != out.end()) return;
    if (out.size() >= max_letters) throw budget_error("alphabet exceeds letter budget");
    out.push_back(g);
  };
  for (const auto& l : letters) {
    if (l.arity() != arity) throw usage_error("alphabet letter arity mismatch");
    push(l);
  }
  for (const auto& fam : families) {
    std::vector<RayPoint> pts;
    for (RayPoint p : fam.window.points(arity)) {
      bool movable = true;
      if (fam.tag.kind == SubsetKind::FixRay) movable = p.ray != fam.tag.i;
      if (fam.tag.kind == SubsetKind::SymTwoRays)
        movable = p.ray == fam.tag.i || p.ray == fam.tag.j;
      if (movable) pts.push_back(p);
    }
    for (const auto& g : permutations_of(arity, pts, max_letters)) push(g);
  }
  return out;
}

struct GeodesicSearch::Impl {
  std::vector<Element> letters;
  size_t budget;
  bool exceeded = false;
  std::unordered_map<Element, int, ElementHash> dist;
  std::vector<std::vector<Element>> levels;
  std::vector<std::vector<Element>> level_invs;  // inverses, aligned with levels
  size_t node_count = 0;

  explicit Impl(std::vector<Element> ls, size_t b) : letters(std::move(ls)), budget(b) {
    if (letters.empty()) throw usage_error("alphabet empty");
    Element id = Element::identity(letters.front().arity());
    dist.emplace(id, 0);
    levels.push_back({id});
    level_invs.push_back({id});
    node_count = 1;
  }

  // Grow the shared ball to radius d. Expansion order is fixed (level order
  // then letter order), so the stored levels are deterministic.
  bool ensure(int d) {
    while (static_cast<int>(levels.size()) - 1 < d) {
      if (exceeded) return false;
      const auto& frontier = levels.back();
      int next_d = static_cast<int>(levels.size());
      std::vector<Element> next, next_inv;
      for (const auto& x : frontier) {
        for (const auto& l : letters) {
          Element y = compose(x, l);
          if (dist.emplace(y, next_d).second) {
            if (++node_count > budget) {
              exceeded = true;
              // drop the partial level so cached answers stay exact
              for (const auto& e : next) dist.erase(e);
              return false;
            }
            next_inv.push_back(inverse(y));
            next.push_back(std::move(y));
          }
        }
      }
      levels.push_back(std::move(next));
      level_invs.push_back(std::move(next_inv));
    }
    return true;
  }

  // Exact distance if <= max_len, using ball radius fwd for prefixes and
  // enumerating suffixes of length <= max_len - fwd.
  std::optional<long long> distance(const Element& g, long long max_len, bool& budget_hit) {
    budget_hit = false;
    if (g.is_identity()) return 0;
    if (max_len <= 0) return std::nullopt;
    int fwd = static_cast<int>(std::min<long long>((max_len + 1) / 2, max_len));
    // prefer reusing whatever radius is already built
    fwd = std::max(fwd, std::min<int>(static_cast<int>(levels.size()) - 1,
                                      static_cast<int>(max_len)));
    if (!ensure(fwd)) {
      budget_hit = true;
      fwd = static_cast<int>(levels.size()) - 1;
      if (fwd == 0) return std::nullopt;
    }
    long long best = -1;
    int back = static_cast<int>(max_len) - fwd;
    for (int b = 0; b <= back; ++b) {
      if (b >= static_cast<int>(levels.size())) break;  // suffix ball is the same ball
      for (size_t k = 0; k < levels[static_cast<size_t>(b)].size(); ++k) {
        const Element& y_inv = level_invs[static_cast<size_t>(b)][k];
        Element x = compose(g, y_inv);
        auto it = dist.find(x);
        if (it == dist.end()) continue;
        long long total = it->second + b;
        if (best < 0 || total < best) best = total;
      }
      if (best == 1 && !g.is_identity()) break;
    }
    if (budget_hit && back >= static_cast<int>(levels.size()))
      return std::nullopt;  // could not cover the suffix side either
    if (best < 0 || best > max_len) return std::nullopt;
    return best;
  }
};

GeodesicSearch::GeodesicSearch(std::vector<Element> letters, size_t node_budget)
    : impl_(std::make_unique<Impl>(std::move(letters), node_budget)) {}
GeodesicSearch::~GeodesicSearch() = default;
GeodesicSearch::GeodesicSearch(GeodesicSearch&&) noexcept = default;
size_t GeodesicSearch::nodes() const { return impl_->node_count; }

NormResult GeodesicSearch::norm(const Element& g, long long max_len, bool want_witness) {
  NormResult res;
  bool budget_hit = false;
  auto d = impl_->distance(g, max_len, budget_hit);
  res.budget_exceeded = budget_hit;
  if (!d) return res;
  res.length = *d;
  if (want_witness && *d > 0) {
    // Lexicographically least witness at the found length, letter order =
    // enumeration order.
    Element rest = g;
    long long remaining = *d;
    while (remaining > 0) {
      bool advanced = false;
      for (const auto& l : impl_->letters) {
        Element next = compose(inverse(l), rest);
        bool bh = false;
        auto dn = impl_->distance(next, remaining - 1, bh);
        if (dn && *dn == remaining - 1) {
          res.witness.push_back(l);
          rest = std::move(next);
          --remaining;
          advanced = true;
          break;
        }
      }
      if (!advanced) throw budget_error("witness reconstruction ran out of budget");
    }
  }
  return res;
}

NormResult bfs_norm(const Element& g, const AlphabetSpec& alphabet, long long max_len,
                    const BfsOptions& opts) {
  if (max_len < 0) throw usage_error("bfs_norm: max_len must be >= 0");
  GeodesicSearch search(alphabet.enumerate(g.arity(), opts.max_letters), opts.node_budget);
  return search.norm(g, max_len, opts.want_witness);
}

AlphabetSpec fix_t_alphabet(int arity, Coord window_hi, const Element* cover) {
  if (arity < 2) throw usage_error("fix_t_alphabet needs arity >= 2");
  AlphabetSpec a;
  a.letters.push_back(Element::translation(arity, 1, 2));
  a.letters.push_back(Element::translation(arity, 2, 1));
  Window w;
  w.add(2, 0, window_hi);
  if (cover) {
    std::vector<Coord> hi(static_cast<size_t>(arity) + 1, -1);
    for (const auto& e : cover->exceptions()) {
      if (e.first.ray >= 3) hi[static_cast<size_t>(e.first.ray)] =
          std::max(hi[static_cast<size_t>(e.first.ray)], e.first.coord);
      if (e.second.ray >= 3) hi[static_cast<size_t>(e.second.ray)] =
          std::max(hi[static_cast<size_t>(e.second.ray)], e.second.coord);
    }
    for (int r = 3; r <= arity; ++r)
      if (hi[static_cast<size_t>(r)] >= 0) w.add(r, 0, hi[static_cast<size_t>(r)]);
  }
  a.families.push_back({SubsetTag::fix_ray(1), std::move(w)});
  return a;
}

OracleNorm stabilized_norm(const Element& sigma, const BfsOptions& opts) {
  OracleNorm out;
  if (sigma.is_identity()) {
    out.length = 0;
    return out;
  }
  if (!sigma.finitely_supported())
    throw usage_error("stabilized_norm expects a finitely supported element");
  long long k = k_of(sigma);
  Coord supp_hi = 0;
  for (const auto& e : sigma.exceptions())
    if (e.first.ray == 2) supp_hi = std::max(supp_hi, e.first.coord);
  Coord w = supp_hi + k;
  std::optional<long long> prev;
  for (int iter = 0; iter < 8; ++iter, ++w) {
    NormResult r = bfs_norm(sigma, fix_t_alphabet(sigma.arity(), w, &sigma), 1 + 2 * k, opts);
    if (r.budget_exceeded) {
      out.budget_exceeded = true;
      return out;
    }
    if (prev && r.length == prev) {
      out.length = r.length;
      out.window_used = w;
      return out;
    }
    prev = r.length;
  }
  throw budget_error("stabilized_norm: window did not stabilize");
}

std::vector<NormResult> power_norm_profile(const Element& g, int j_max, const BfsOptions& opts) {
  std::vector<NormResult> out;
  if (g.finitely_supported()) {
    Element p = Element::identity(g.arity());
    for (int j = 1; j <= j_max; ++j) {
      p = compose(p, g);
      NormResult r;
      r.length = norm_fix_t(p);
      out.push_back(std::move(r));
    }
    return out;
  }
  for (int r = 3; r <= g.arity(); ++r)
    if (g.lambda(r) != 0)
      throw usage_error("power_norm_profile: element must lie in H_n({1,2})");
  long long m = g.lambda(2);
  Element sigma = compose(g, Element::translation(g.arity(), 1, 2, -m));
  long long per_power = std::llabs(m) + (sigma.is_identity() ? 0 : norm_fix_t(sigma));
  Element p = Element::identity(g.arity());
  for (int j = 1; j <= j_max; ++j) {
    p = compose(p, g);
    long long cap = per_power * j;
    long long kk = 0;
    Element psigma = compose(p, Element::translation(g.arity(), 1, 2, -m * j));
    if (!psigma.is_identity()) kk = k_of(psigma);
    Coord supp_hi = 0;
    for (const auto& e : p.exceptions())
      if (e.first.ray == 2) supp_hi = std::max(supp_hi, e.first.coord);
    NormResult r = bfs_norm(p, fix_t_alphabet(g.arity(), supp_hi + kk + 1, &p), cap, opts);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace houghton
