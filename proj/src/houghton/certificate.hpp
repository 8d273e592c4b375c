#pragma once

#include <optional>
#include <vector>

#include "houghton/confining.hpp"
#include "houghton/element.hpp"
#include "houghton/subsets.hpp"

namespace houghton {

// Machine-checkable evidence that an element lies in the iterated closure
// P_n = alpha^{n0}(P_{n-1}^2) ∪ P_{n-1}, P_0 = {alpha^i(f_j)} ∪ Q.
// Leaves are either claimed members of Q or seed powers alpha^i(f_j); a node
// at level m has two children at levels <= m-1 and evaluates to
// alpha^{n0}(left · right).
struct ClosureCertificate {
  enum class Kind { LeafQ, LeafSeed, Node };
  Kind kind = Kind::LeafQ;
  Element value;                     // LeafQ
  long long seed_power = 0;          // LeafSeed: alpha^seed_power(f_seed_index)
  int seed_index = 0;
  std::vector<ClosureCertificate> children;  // Node: exactly two
  int level = 0;

  static ClosureCertificate leaf_q(Element e);
  static ClosureCertificate leaf_seed(long long i, int j);
  static ClosureCertificate node(ClosureCertificate left, ClosureCertificate right);
};

struct SeedFamily {
  std::vector<Element> seeds;  // f_1, f_2, ...
  long long K = 1;             // uniform constant with alpha^K(f_j) in Q
};

// Exact evaluation with full re-checking of every leaf predicate and the
// level ordering; throws violation_error naming the failing node.
Element verify_certificate(const ClosureCertificate& c, const SubsetSpec& q,
                           const SeedFamily& seeds, long long n0, const Conjugation& alpha);

struct CertifyOptions {
  int depth = 6;
  long long seed_power_max = 64;
  int pool = 48;
  uint64_t seed = 0;
  size_t budget = 200000;
};

// Bounded goal-directed search for a certificate evaluating to g
// (iterative deepening over the level, sub-goals memoized by canonical
// element); nothing if none is found within the budget.
std::optional<ClosureCertificate> closure_certify(const Element& g, const SubsetSpec& q,
                                                  const SeedFamily& seeds, long long n0,
                                                  const Conjugation& alpha,
                                                  const CertifyOptions& opts = {});

}  // namespace houghton
