#include "houghton/element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

std::string point_str(RayPoint p) {
  return std::to_string(p.ray) + ":" + std::to_string(p.coord);
}

void check_point(int arity, RayPoint p) {
  if (p.ray < 1 || p.ray > arity)
    throw usage_error("ray " + std::to_string(p.ray) + " out of range for arity " +
                      std::to_string(arity));
  if (p.coord < 0) throw usage_error("negative ray coordinate " + point_str(p));
}

}  // namespace

long long Element::lambda(int ray) const {
  if (ray < 1 || ray > n_) throw usage_error("lambda: ray out of range");
  return shift_[static_cast<size_t>(ray - 1)];
}

bool Element::translates() const {
  return std::any_of(shift_.begin(), shift_.end(), [](long long v) { return v != 0; });
}

RayPoint Element::apply(RayPoint p) const {
  check_point(n_, p);
  size_t i = static_cast<size_t>(p.ray - 1);
  if (p.coord >= threshold_[i]) return {p.ray, p.coord + shift_[i]};
  auto it = std::lower_bound(exc_.begin(), exc_.end(), p,
                             [](const auto& e, RayPoint q) { return e.first < q; });
  if (it != exc_.end() && it->first == p) return it->second;
  return p;
}

RayPoint Element::apply_inverse(RayPoint p) const {
  check_point(n_, p);
  size_t i = static_cast<size_t>(p.ray - 1);
  if (p.coord >= threshold_[i] + shift_[i]) return {p.ray, p.coord - shift_[i]};
  auto it = std::lower_bound(by_image_.begin(), by_image_.end(), p,
                             [this](int idx, RayPoint q) {
                               return exc_[static_cast<size_t>(idx)].second < q;
                             });
  if (it != by_image_.end() && exc_[static_cast<size_t>(*it)].second == p)
    return exc_[static_cast<size_t>(*it)].first;
  return p;
}

long long Element::z_apply(long long z) const {
  auto out = point_to_z(apply(z_to_point(z)));
  if (!out) throw usage_error("image of z-point " + std::to_string(z) + " left rays 1,2");
  return *out;
}

long long Element::z_apply_inverse(long long z) const {
  auto out = point_to_z(apply_inverse(z_to_point(z)));
  if (!out) throw usage_error("preimage of z-point " + std::to_string(z) + " left rays 1,2");
  return *out;
}

std::vector<RayPoint> Element::support() const {
  if (translates()) throw usage_error("support: element is not finitely supported");
  std::vector<RayPoint> out;
  out.reserve(exc_.size());
  for (const auto& e : exc_) out.push_back(e.first);
  return out;
}

Element Element::lift(int arity) const {
  if (arity < n_) throw usage_error("lift: target arity smaller than current");
  if (arity == n_) return *this;
  Element out(arity, shift_);
  out.shift_.resize(static_cast<size_t>(arity), 0);
  out.exc_ = exc_;
  out.finish();
  return out;
}

bool operator<(const Element& a, const Element& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.shift_ != b.shift_) return a.shift_ < b.shift_;
  return a.exc_ < b.exc_;
}

size_t Element::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(n_));
  for (long long v : shift_) mix(static_cast<uint64_t>(v));
  for (const auto& e : exc_) {
    mix(static_cast<uint64_t>(e.first.ray));
    mix(static_cast<uint64_t>(e.first.coord));
    mix(static_cast<uint64_t>(e.second.ray));
    mix(static_cast<uint64_t>(e.second.coord));
  }
  return static_cast<size_t>(h);
}

void Element::finish() {
  std::sort(exc_.begin(), exc_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  by_image_.resize(exc_.size());
  std::iota(by_image_.begin(), by_image_.end(), 0);
  std::sort(by_image_.begin(), by_image_.end(), [this](int a, int b) {
    return exc_[static_cast<size_t>(a)].second < exc_[static_cast<size_t>(b)].second;
  });
  threshold_.assign(static_cast<size_t>(n_), 0);
  for (int r = 1; r <= n_; ++r) {
    size_t i = static_cast<size_t>(r - 1);
    Coord t = std::max<Coord>(0, -shift_[i]);
    for (const auto& e : exc_) {
      if (e.first.ray == r) t = std::max(t, e.first.coord + 1);
      if (e.second.ray == r) t = std::max(t, e.second.coord + 1 - shift_[i]);
    }
    threshold_[i] = t;
  }
}

Element Element::identity(int arity) {
  if (arity < 1) throw usage_error("arity must be >= 1");
  Element g(arity, std::vector<long long>(static_cast<size_t>(arity), 0));
  g.finish();
  return g;
}

Element Element::translation(int arity, int from, int to, long long p) {
  if (arity < 2) throw usage_error("translations need arity >= 2");
  if (from < 1 || from > arity || to < 1 || to > arity || from == to)
    throw usage_error("bad translation rays t[" + std::to_string(from) + "," +
                      std::to_string(to) + "]");
  if (p == 0) return identity(arity);
  if (p < 0) return translation(arity, to, from, -p);
  Element g(arity, std::vector<long long>(static_cast<size_t>(arity), 0));
  g.shift_[static_cast<size_t>(from - 1)] = -p;
  g.shift_[static_cast<size_t>(to - 1)] = p;
  for (Coord c = 0; c < p; ++c) g.exc_.push_back({{from, c}, {to, p - 1 - c}});
  g.finish();
  return g;
}

Element Element::from_cycles(int arity, const std::vector<std::vector<RayPoint>>& cycles) {
  std::vector<std::pair<RayPoint, RayPoint>> overrides;
  std::set<RayPoint> seen;
  for (const auto& cyc : cycles) {
    for (RayPoint p : cyc) {
      check_point(arity, p);
      if (!seen.insert(p).second)
        throw usage_error("non-bijective cycle literal: point " + point_str(p) + " repeated");
    }
    if (cyc.size() < 2) continue;
    for (size_t i = 0; i < cyc.size(); ++i)
      overrides.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
  }
  return from_map(arity, std::vector<long long>(static_cast<size_t>(arity), 0),
                  std::move(overrides));
}

Element Element::from_z_cycles(int arity, const std::vector<std::vector<long long>>& zs) {
  if (arity < 2) throw usage_error("z-cycles need arity >= 2");
  std::vector<std::vector<RayPoint>> cycles;
  cycles.reserve(zs.size());
  for (const auto& cyc : zs) {
    std::vector<RayPoint> pts;
    pts.reserve(cyc.size());
    for (long long z : cyc) pts.push_back(z_to_point(z));
    cycles.push_back(std::move(pts));
  }
  return from_cycles(arity, cycles);
}

Element Element::from_map(int arity, std::vector<long long> translation,
                          std::vector<std::pair<RayPoint, RayPoint>> overrides) {
  if (arity < 1) throw usage_error("arity must be >= 1");
  if (translation.size() != static_cast<size_t>(arity))
    throw usage_error("translation vector length differs from arity");
  if (std::accumulate(translation.begin(), translation.end(), 0ll) != 0)
    throw usage_error("translation vector must sum to 0");
  std::map<RayPoint, RayPoint> table;
  for (const auto& e : overrides) {
    check_point(arity, e.first);
    check_point(arity, e.second);
    if (!table.emplace(e.first, e.second).second)
      throw usage_error("duplicate mapping for point " + point_str(e.first));
  }
  std::vector<Coord> window(static_cast<size_t>(arity), 0);
  for (int r = 1; r <= arity; ++r) {
    size_t i = static_cast<size_t>(r - 1);
    Coord w = std::max<Coord>(0, -translation[i]);
    for (const auto& e : table) {
      if (e.first.ray == r) w = std::max(w, e.first.coord + 1);
      if (e.second.ray == r) w = std::max(w, e.second.coord + 1 - translation[i]);
    }
    window[i] = w;
  }
  auto image = [&](RayPoint p) -> RayPoint {
    auto it = table.find(p);
    if (it != table.end()) return it->second;
    Coord w = window[static_cast<size_t>(p.ray - 1)];
    if (p.coord >= w) return {p.ray, p.coord + translation[static_cast<size_t>(p.ray - 1)]};
    return p;
  };
  Element g = from_window_map(arity, std::move(translation), image, window);
  g.validate();
  return g;
}

Element Element::from_window_map(int n, std::vector<long long> shift,
                                 const std::function<RayPoint(RayPoint)>& image,
                                 const std::vector<Coord>& window) {
  Element g(n, std::move(shift));
  for (int r = 1; r <= n; ++r) {
    size_t i = static_cast<size_t>(r - 1);
    std::vector<RayPoint> buf(static_cast<size_t>(window[i]));
    for (Coord c = 0; c < window[i]; ++c) buf[static_cast<size_t>(c)] = image({r, c});
    Coord lo = std::max<Coord>(0, -g.shift_[i]);
    Coord t = window[i];
    while (t > lo && buf[static_cast<size_t>(t - 1)] == RayPoint{r, t - 1 + g.shift_[i]}) --t;
    for (Coord c = 0; c < t; ++c) {
      RayPoint q = buf[static_cast<size_t>(c)];
      if (q != RayPoint{r, c}) g.exc_.push_back({{r, c}, q});
    }
  }
  g.finish();
  return g;
}

void Element::validate() const {
  std::set<RayPoint> images;
  for (const auto& e : exc_) {
    check_point(n_, e.first);
    check_point(n_, e.second);
    size_t i = static_cast<size_t>(e.first.ray - 1);
    if (e.first.coord >= threshold_[i])
      throw usage_error("exception source " + point_str(e.first) + " at or above threshold");
    if (!images.insert(e.second).second)
      throw usage_error("not injective: image " + point_str(e.second) + " repeated");
    size_t j = static_cast<size_t>(e.second.ray - 1);
    if (e.second.coord >= threshold_[j] + shift_[j])
      throw usage_error("image " + point_str(e.second) + " collides with a tail image");
  }
  for (int r = 1; r <= n_; ++r) {
    size_t i = static_cast<size_t>(r - 1);
    if (threshold_[i] + shift_[i] < 0)
      throw usage_error("tail of ray " + std::to_string(r) + " leaves the ray");
    // Below the tail start, every point must be covered exactly once by
    // either an exception image or a fixed point.
    for (Coord c = 0; c < threshold_[i] + shift_[i]; ++c) {
      RayPoint q{r, c};
      bool is_image = images.count(q) > 0;
      bool is_fixed = c < threshold_[i] && apply(q) == q;
      if (is_image == is_fixed)
        throw usage_error("not bijective at " + point_str(q));
    }
  }
}

Element compose(const Element& a, const Element& b) {
  if (a.n_ != b.n_) throw usage_error("compose: arity mismatch");
  int n = a.n_;
  std::vector<long long> shift(static_cast<size_t>(n));
  std::vector<Coord> window(static_cast<size_t>(n));
  for (size_t i = 0; i < shift.size(); ++i) {
    shift[i] = a.shift_[i] + b.shift_[i];
    window[i] = std::max<Coord>(
        {0, -shift[i], b.threshold_[i], a.threshold_[i] - b.shift_[i]});
  }
  auto image = [&](RayPoint p) { return a.apply(b.apply(p)); };
  return Element::from_window_map(n, std::move(shift), image, window);
}

Element inverse(const Element& a) {
  Element g(a.n_, a.shift_);
  for (auto& v : g.shift_) v = -v;
  g.exc_.reserve(a.exc_.size());
  for (const auto& e : a.exc_) g.exc_.push_back({e.second, e.first});
  g.finish();
  return g;
}

Element power(const Element& g, long long e) {
  if (e < 0) return power(inverse(g), -e);
  Element acc = Element::identity(g.arity());
  Element base = g;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

Element conjugate(const Element& a, const Element& g) {
  return compose(compose(a, g), inverse(a));
}

Element conj_by_t(const Element& g, long long s) {
  if (g.arity() < 2) throw usage_error("conj_by_t needs arity >= 2");
  if (s == 0) return g;
  Element ts = Element::translation(g.arity(), 1, 2, s);
  return conjugate(ts, g);
}

}  // namespace houghton
