#include "houghton/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

std::vector<int> parse_ray_list(const std::string& text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

bool touches_ray(const Element& g, int ray) {
  for (const auto& e : g.exceptions())
    if (e.first.ray == ray || e.second.ray == ray) return true;
  return false;
}

}  // namespace

SubsetTag SubsetTag::parse(const std::string& text) {
  if (text == "syminf") return syminf();
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "fix") return fix_ray(std::stoi(rest));
  if (head == "ker") return ker_lambda(std::stoi(rest));
  if (head == "partial") return partial(parse_ray_list(rest));
  if (head == "sym2") {
    auto rays = parse_ray_list(rest);
    if (rays.size() != 2) throw usage_error("sym2 takes two rays");
    return sym_two_rays(rays[0], rays[1]);
  }
  throw usage_error("unknown subset tag '" + text + "'");
}

std::string SubsetTag::str() const {
  switch (kind) {
    case SubsetKind::SymInf:
      return "syminf";
    case SubsetKind::FixRay:
      return "fix:" + std::to_string(i);
    case SubsetKind::KerLambda:
      return "ker:" + std::to_string(i);
    case SubsetKind::Partial: {
      std::string out = "partial:";
      for (size_t k = 0; k < rays.size(); ++k) out += (k ? "," : "") + std::to_string(rays[k]);
      return out;
    }
    case SubsetKind::SymTwoRays:
      return "sym2:" + std::to_string(i) + "," + std::to_string(j);
  }
  return "?";
}

bool member(const Element& g, const SubsetTag& tag) {
  switch (tag.kind) {
    case SubsetKind::SymInf:
      return g.finitely_supported();
    case SubsetKind::FixRay:
      return g.lambda(tag.i) == 0 && !touches_ray(g, tag.i);
    case SubsetKind::KerLambda:
      return g.lambda(tag.i) == 0;
    case SubsetKind::Partial:
      for (int r = 1; r <= g.arity(); ++r)
        if (std::find(tag.rays.begin(), tag.rays.end(), r) == tag.rays.end() &&
            g.lambda(r) != 0)
          return false;
      return true;
    case SubsetKind::SymTwoRays:
      if (!g.finitely_supported()) return false;
      for (const auto& e : g.exceptions()) {
        if (e.first.ray != tag.i && e.first.ray != tag.j) return false;
        if (e.second.ray != tag.i && e.second.ray != tag.j) return false;
      }
      return true;
  }
  return false;
}

Window Window::z_interval(long long zlo, long long zhi) {
  Window w;
  if (zlo <= -1) w.add(1, std::max<Coord>(0, -zhi - 1), -zlo - 1);
  if (zhi >= 0) w.add(2, std::max<Coord>(0, zlo), zhi);
  return w;
}

Window& Window::add(int ray, Coord lo, Coord hi) {
  if (lo <= hi) ranges.push_back({ray, lo, hi});
  return *this;
}

std::vector<RayPoint> Window::points(int arity) const {
  std::set<RayPoint> out;
  for (const auto& r : ranges) {
    if (r.ray < 1 || r.ray > arity) continue;
    for (Coord c = r.lo; c <= r.hi; ++c) out.insert({r.ray, c});
  }
  return {out.begin(), out.end()};
}

bool Window::contains(RayPoint p) const {
  for (const auto& r : ranges)
    if (r.ray == p.ray && r.lo <= p.coord && p.coord <= r.hi) return true;
  return false;
}

std::string Window::str() const {
  std::string out = "[";
  for (size_t k = 0; k < ranges.size(); ++k) {
    if (k) out += " ";
    out += "r" + std::to_string(ranges[k].ray) + ":" + std::to_string(ranges[k].lo) + ".." +
           std::to_string(ranges[k].hi);
  }
  return out + "]";
}

SubsetSpec SubsetSpec::whole(int arity, SubsetTag ambient_tag) {
  SubsetSpec s;
  s.arity = arity;
  s.ambient = std::move(ambient_tag);
  return s;
}

SubsetSpec SubsetSpec::of(int arity, SubsetTag ambient_tag, SubsetTag predicate) {
  SubsetSpec s = whole(arity, std::move(ambient_tag));
  s.tags.push_back(std::move(predicate));
  return s;
}

SubsetSpec SubsetSpec::window_family(int arity, SubsetTag ambient_tag, Window w) {
  SubsetSpec s = whole(arity, std::move(ambient_tag));
  s.window = std::move(w);
  return s;
}

SubsetSpec SubsetSpec::singleton(int arity, SubsetTag ambient_tag, Element e) {
  SubsetSpec s = whole(arity, std::move(ambient_tag));
  s.extras.push_back(std::move(e));
  return s;
}

SubsetSpec SubsetSpec::union_of(SubsetSpec a, SubsetSpec b) {
  if (a.arity != b.arity) throw usage_error("union of subsets with different arity");
  SubsetSpec s;
  s.arity = a.arity;
  s.ambient = a.ambient;
  s.ambient_whole_group = a.ambient_whole_group || b.ambient_whole_group;
  s.parts.push_back(std::move(a));
  s.parts.push_back(std::move(b));
  return s;
}

bool SubsetSpec::contains(const Element& g) const {
  if (g.arity() != arity) return false;
  if (!parts.empty())
    return std::any_of(parts.begin(), parts.end(),
                       [&](const SubsetSpec& p) { return p.contains(g); });
  if (!ambient_whole_group && !member(g, ambient)) return false;
  if (tags.empty() && !window && extras.empty()) return true;
  for (const auto& t : tags)
    if (member(g, t)) return true;
  if (window && g.finitely_supported()) {
    bool inside = true;
    for (const auto& e : g.exceptions())
      if (!window->contains(e.first)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return std::find(extras.begin(), extras.end(), g) != extras.end();
}

std::string SubsetSpec::label() const {
  if (!parts.empty()) {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) out += (k ? " u " : "") + parts[k].label();
    return out;
  }
  std::string amb = ambient_whole_group ? "hn" : ambient.str();
  if (tags.empty() && !window && extras.empty()) return amb;
  std::string out;
  for (size_t k = 0; k < tags.size(); ++k) out += (k ? " u " : "") + tags[k].str();
  if (window) out += (out.empty() ? "" : " u ") + ("win" + window->str());
  if (!extras.empty())
    out += (out.empty() ? "" : " u ") + ("{" + std::to_string(extras.size()) + " elems}");
  return out + " in " + amb;
}

std::vector<Element> permutations_of(int arity, const std::vector<RayPoint>& pts, size_t cap) {
  size_t count = 1;
  for (size_t k = 2; k <= pts.size(); ++k) {
    count *= k;
    if (count > cap) throw budget_error("permutation family too large");
  }
  std::vector<size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Element> out;
  do {
    std::vector<std::pair<RayPoint, RayPoint>> overrides;
    for (size_t k = 0; k < pts.size(); ++k)
      if (idx[k] != k) overrides.push_back({pts[k], pts[idx[k]]});
    if (overrides.empty()) continue;
    out.push_back(Element::from_map(arity, std::vector<long long>(static_cast<size_t>(arity), 0),
                                    std::move(overrides)));
  } while (std::next_permutation(idx.begin(), idx.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Window default_probe_window(int arity) {
  Window w = Window::z_interval(-3, 3);
  if (arity >= 3) {
    w = Window::z_interval(-2, 2);
    for (int r = 3; r <= std::min(arity, 4); ++r) w.add(r, 0, 1);
  }
  return w;
}

}  // namespace

std::vector<Element> SubsetSpec::enumerate_small(size_t cap) const {
  Window probe = default_probe_window(arity);
  std::vector<Element> all;
  try {
    all = permutations_of(arity, probe.points(arity), 50000);
  } catch (const budget_error&) {
    // shrink: z window only
    all = permutations_of(arity, Window::z_interval(-3, 2).points(arity), 50000);
  }
  std::vector<Element> out;
  for (const auto& g : all) {
    if (contains(g)) out.push_back(g);
    if (out.size() >= cap) break;
  }
  for (const auto& e : extras)
    if (std::find(out.begin(), out.end(), e) == out.end() && contains(e)) out.push_back(e);
  return out;
}

Element Sampler::finite_perm(int arity, int max_pts) {
  std::uniform_int_distribution<int> nray(1, arity);
  std::uniform_int_distribution<Coord> off(0, 8);
  std::uniform_int_distribution<int> width(1, 6);
  std::uniform_int_distribution<int> nblocks(1, 2);
  std::set<RayPoint> ptset;
  int blocks = nblocks(rng_);
  for (int b = 0; b < blocks; ++b) {
    int ray = nray(rng_);
    Coord lo = off(rng_);
    Coord hi = lo + width(rng_);
    for (Coord c = lo; c <= hi && static_cast<int>(ptset.size()) < max_pts; ++c)
      ptset.insert({ray, c});
  }
  std::vector<RayPoint> pts(ptset.begin(), ptset.end());
  std::vector<size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng_);
  std::vector<std::pair<RayPoint, RayPoint>> overrides;
  for (size_t k = 0; k < pts.size(); ++k)
    if (idx[k] != k) overrides.push_back({pts[k], pts[idx[k]]});
  return Element::from_map(arity, std::vector<long long>(static_cast<size_t>(arity), 0),
                           std::move(overrides));
}

Element Sampler::element(int arity) {
  Element g = finite_perm(arity);
  if (arity >= 2) {
    std::uniform_int_distribution<int> npairs(0, 2);
    std::uniform_int_distribution<int> ray(1, arity);
    std::uniform_int_distribution<long long> pw(-3, 3);
    int pairs = npairs(rng_);
    for (int k = 0; k < pairs; ++k) {
      int i = ray(rng_), j = ray(rng_);
      if (i == j) continue;
      g = compose(g, Element::translation(arity, i, j, pw(rng_)));
    }
  }
  return g;
}

namespace {

Element sample_tagged(std::mt19937_64& rng, int arity, const SubsetTag& ambient,
                      bool whole_group, const SubsetTag* tag) {
  Sampler helper(rng());
  // Permutation part, restricted by whichever tags demand it.
  auto allowed = [&](RayPoint p) {
    if (tag && tag->kind == SubsetKind::FixRay && p.ray == tag->i) return false;
    if (tag && tag->kind == SubsetKind::SymTwoRays && p.ray != tag->i && p.ray != tag->j)
      return false;
    if (!whole_group && ambient.kind == SubsetKind::FixRay && p.ray == ambient.i) return false;
    return true;
  };
  Element g = Element::identity(arity);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element p = helper.finite_perm(arity);
    bool ok = true;
    for (const auto& e : p.exceptions())
      if (!allowed(e.first) || !allowed(e.second)) {
        ok = false;
        break;
      }
    if (ok) {
      g = p;
      break;
    }
  }
  // Translation part only when both ambient and tag permit it; Fix(R_i)
  // still carries translations on the other rays.
  bool perm_only = (!whole_group && ambient.kind == SubsetKind::SymInf) ||
                   (tag && (tag->kind == SubsetKind::SymInf ||
                            tag->kind == SubsetKind::SymTwoRays));
  if (!perm_only && arity >= 2) {
    auto ray_ok = [&](int r) {
      if (!whole_group) {
        if (ambient.kind == SubsetKind::KerLambda && r == ambient.i) return false;
        if (ambient.kind == SubsetKind::FixRay && r == ambient.i) return false;
        if (ambient.kind == SubsetKind::Partial &&
            std::find(ambient.rays.begin(), ambient.rays.end(), r) == ambient.rays.end())
          return false;
      }
      if (tag && tag->kind == SubsetKind::KerLambda && r == tag->i) return false;
      if (tag && tag->kind == SubsetKind::FixRay && r == tag->i) return false;
      if (tag && tag->kind == SubsetKind::Partial &&
          std::find(tag->rays.begin(), tag->rays.end(), r) == tag->rays.end())
        return false;
      return true;
    };
    std::vector<int> rays;
    for (int r = 1; r <= arity; ++r)
      if (ray_ok(r)) rays.push_back(r);
    if (rays.size() >= 2) {
      std::uniform_int_distribution<int> npairs(0, 2);
      std::uniform_int_distribution<size_t> pick(0, rays.size() - 1);
      std::uniform_int_distribution<long long> pw(-3, 3);
      int pairs = npairs(rng);
      for (int k = 0; k < pairs; ++k) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        g = compose(g, Element::translation(arity, rays[i], rays[j], pw(rng)));
      }
    }
  }
  return g;
}

}  // namespace

Element SubsetSpec::sample(std::mt19937_64& rng) const {
  for (int attempt = 0; attempt < 256; ++attempt) {
    Element g = Element::identity(arity);
    if (!parts.empty()) {
      std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
      g = parts[pick(rng)].sample(rng);
    } else {
      size_t branches = tags.size() + (window ? 1 : 0) + (extras.empty() ? 0 : 1);
      if (branches == 0) {
        g = sample_tagged(rng, arity, ambient, ambient_whole_group, nullptr);
      } else {
        std::uniform_int_distribution<size_t> pick(0, branches - 1);
        size_t b = pick(rng);
        if (b < tags.size()) {
          g = sample_tagged(rng, arity, ambient, ambient_whole_group, &tags[b]);
        } else if (window && b == tags.size()) {
          Sampler helper(rng());
          auto pts = window->points(arity);
          std::vector<size_t> idx(pts.size());
          std::iota(idx.begin(), idx.end(), 0);
          std::shuffle(idx.begin(), idx.end(), rng);
          std::vector<std::pair<RayPoint, RayPoint>> overrides;
          for (size_t k = 0; k < pts.size(); ++k)
            if (idx[k] != k) overrides.push_back({pts[k], pts[idx[k]]});
          g = Element::from_map(arity, std::vector<long long>(static_cast<size_t>(arity), 0),
                                std::move(overrides));
        } else {
          std::uniform_int_distribution<size_t> epick(0, extras.size() - 1);
          g = extras[epick(rng)];
        }
      }
    }
    if (contains(g)) return g;
  }
  throw usage_error("sampler: could not draw a member of " + label());
}

}  // namespace houghton
