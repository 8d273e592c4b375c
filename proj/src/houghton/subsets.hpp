#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "houghton/element.hpp"

namespace houghton {

enum class SubsetKind { SymInf, FixRay, KerLambda, Partial, SymTwoRays };

// Predicate tag over a Houghton group: membership is decided exactly on the
// canonical form.
struct SubsetTag {
  SubsetKind kind = SubsetKind::SymInf;
  int i = 0, j = 0;        // FixRay(i), KerLambda(i), SymTwoRays(i,j)
  std::vector<int> rays;   // Partial(I)

  static SubsetTag syminf() { return {}; }
  static SubsetTag fix_ray(int i) { return {SubsetKind::FixRay, i, 0, {}}; }
  static SubsetTag ker_lambda(int i) { return {SubsetKind::KerLambda, i, 0, {}}; }
  static SubsetTag partial(std::vector<int> rays) {
    return {SubsetKind::Partial, 0, 0, std::move(rays)};
  }
  static SubsetTag sym_two_rays(int i, int j) { return {SubsetKind::SymTwoRays, i, j, {}}; }

  // "syminf" | "fix:1" | "ker:2" | "partial:1,2" | "sym2:1,2"
  static SubsetTag parse(const std::string& text);
  std::string str() const;
};

bool member(const Element& g, const SubsetTag& tag);

// Finite set of ray points given as per-ray coordinate ranges.
struct Window {
  struct Range {
    int ray;
    Coord lo, hi;  // inclusive
  };
  std::vector<Range> ranges;

  static Window z_interval(long long zlo, long long zhi);
  Window& add(int ray, Coord lo, Coord hi);
  std::vector<RayPoint> points(int arity) const;
  bool contains(RayPoint p) const;
  std::string str() const;
};

// Predicate-defined subset of a Houghton group with a membership test and a
// seeded sampler. The predicate is: in the ambient group, and in the union
// of the tags / the window family / the explicit extras / the nested parts
// (whole ambient when no predicate is given).
struct SubsetSpec {
  int arity = 2;
  SubsetTag ambient = SubsetTag::syminf();  // SymInf, KerLambda, Partial; or whole H_n
  bool ambient_whole_group = false;
  std::vector<SubsetTag> tags;
  std::optional<Window> window;
  std::vector<Element> extras;
  std::vector<SubsetSpec> parts;            // union with other subsets
  std::optional<long long> diameter;        // set by confining_union

  static SubsetSpec whole(int arity, SubsetTag ambient_tag);
  static SubsetSpec of(int arity, SubsetTag ambient_tag, SubsetTag predicate);
  static SubsetSpec window_family(int arity, SubsetTag ambient_tag, Window w);
  static SubsetSpec singleton(int arity, SubsetTag ambient_tag, Element e);
  static SubsetSpec union_of(SubsetSpec a, SubsetSpec b);

  bool contains(const Element& g) const;
  std::string label() const;

  // Deterministic pool of small members in canonical order (capped).
  std::vector<Element> enumerate_small(size_t cap) const;
  Element sample(std::mt19937_64& rng) const;
};

// Seeded generators for property tests and sampled axiom checks; all draws
// are deterministic functions of the seed.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  // Random permutation of a random window of at most max_pts points.
  Element finite_perm(int arity, int max_pts = 16);
  // Generic H_n element: window permutation times bounded t-powers.
  Element element(int arity);
  Element subset_member(const SubsetSpec& spec) { return spec.sample(rng_); }

 private:
  std::mt19937_64 rng_;
};

// All permutations moving only the given points (identity excluded),
// canonically sorted. Throws budget_error if the count would exceed cap.
std::vector<Element> permutations_of(int arity, const std::vector<RayPoint>& pts, size_t cap);

}  // namespace houghton
