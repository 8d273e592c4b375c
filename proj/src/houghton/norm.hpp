#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "houghton/element.hpp"
#include "houghton/subsets.hpp"

namespace houghton {

// k(σ): least k >= 0 with supp(σ) ∩ (-∞,-k) = ∅ on the z-line; only ray-1
// support matters.
long long k_of(const Element& sigma);

// Exact word length of a finitely supported σ over Fix(R_1) ∪ {t} in the
// second partial Houghton group: 0 for the identity, 1 + 2 k(σ) otherwise.
long long norm_fix_t(const Element& sigma);

// Word-cost-1 alphabet: explicit letters plus window-restricted families
// ("all finitely supported members of the tagged subset supported inside the
// window").
struct AlphabetSpec {
  struct Family {
    SubsetTag tag;
    Window window;
  };
  std::vector<Element> letters;
  std::vector<Family> families;

  // Explicit letters first (given order), then each family canonically
  // sorted; identity dropped, duplicates keep their first position.
  std::vector<Element> enumerate(int arity, size_t max_letters) const;
};

struct NormResult {
  std::optional<long long> length;  // empty: exceeds max_len (or budget)
  bool budget_exceeded = false;
  std::vector<Element> witness;     // composes left-to-right to the query
};

struct BfsOptions {
  size_t node_budget = 10'000'000;
  size_t max_letters = 1'000'000;
  bool want_witness = false;
};

// Shared-ball geodesic search over a fixed alphabet. Levels of the ball
// around the identity are grown on demand and reused across queries; a
// query for g meets the ball with a short suffix enumeration, which gives
// exact distances up to the requested bound.
class GeodesicSearch {
 public:
  GeodesicSearch(std::vector<Element> letters, size_t node_budget);
  ~GeodesicSearch();
  GeodesicSearch(GeodesicSearch&&) noexcept;

  NormResult norm(const Element& g, long long max_len, bool want_witness = false);
  size_t nodes() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

NormResult bfs_norm(const Element& g, const AlphabetSpec& alphabet, long long max_len,
                    const BfsOptions& opts = {});

// Fix(R_1) ∪ {t^{±1}} alphabet whose family window is {0..window_hi} on the
// z-line, plus the off-z rays of `cover` so supports away from rays 1,2 stay
// reachable.
AlphabetSpec fix_t_alphabet(int arity, Coord window_hi, const Element* cover = nullptr);

struct OracleNorm {
  std::optional<long long> length;
  Coord window_used = 0;
  bool budget_exceeded = false;
};

// Self-validating BFS oracle for the Fix(R_1) ∪ {t} norm: widens the family
// window until the value is stable for two consecutive widths.
OracleNorm stabilized_norm(const Element& sigma, const BfsOptions& opts = {});

// Norms of g, g^2, ..., g^j_max: by the closed form for finitely supported
// g, by the BFS oracle otherwise (g must lie in H_n({1,2})).
std::vector<NormResult> power_norm_profile(const Element& g, int j_max,
                                           const BfsOptions& opts = {});

}  // namespace houghton
