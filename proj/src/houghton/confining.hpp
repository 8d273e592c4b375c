#pragma once

#include <map>
#include <optional>
#include <utility>

#include "houghton/element.hpp"
#include "houghton/subsets.hpp"
#include "json.hpp"

namespace houghton {

// alpha(g) = a g a^{-1}; powers of a are cached.
class Conjugation {
 public:
  explicit Conjugation(Element a) : a_(std::move(a)) {}
  const Element& by() const { return a_; }
  Element apply(const Element& g, long long p = 1) const;

 private:
  const Element& power_of(long long p) const;
  Element a_;
  mutable std::map<long long, Element> powers_;
};

struct ConfiningOptions {
  int samples = 200;
  uint64_t seed = 0;
  int n0_max = 4;
  long long esc_max = 64;
  size_t pool_cap = 4096;
  int pool_pair_side = 16;
};

// Sampled verdicts: a false field always carries a re-verifiable witness; a
// true field means "no counterexample found on the budget".
struct ConfiningReport {
  bool invariance_ok = true;
  std::optional<Element> invariance_counterexample;
  std::optional<int> n0_found;
  std::optional<std::pair<Element, Element>> n0_failing_pair;
  bool exhaustion_ok = true;
  std::optional<Element> exhaustion_counterexample;
  std::optional<Element> strict_witness;

  bool confining() const { return invariance_ok && n0_found.has_value() && exhaustion_ok; }
  bool strictly_confining() const { return confining() && strict_witness.has_value(); }
  nlohmann::ordered_json to_json() const;
};

ConfiningReport check_confining(const SubsetSpec& q, const Conjugation& alpha,
                                const ConfiningOptions& opts = {});

// min{ s >= 0 : alpha^s(g) in Q }, or nothing if it exceeds the bound.
std::optional<long long> escape_time(const SubsetSpec& q, const Conjugation& alpha,
                                     const Element& g, long long bound);

struct UnionResult {
  std::optional<SubsetSpec> merged;     // Q ∪ S tagged with the verified diameter
  std::optional<Element> refutation;    // member of S with no short Q-word
  long long diameter = 0;
};

// Verifies sampled members of S are bounded in the Q-letter word metric and
// returns the enlarged subset, else a refutation element.
UnionResult confining_union(const SubsetSpec& q, const SubsetSpec& s, const Conjugation& alpha,
                            long long diam_bound, const ConfiningOptions& opts = {});

}  // namespace houghton
