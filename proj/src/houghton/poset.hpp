#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "houghton/character.hpp"
#include "houghton/element.hpp"
#include "houghton/permgroup.hpp"
#include "json.hpp"

namespace houghton {

// Symbolic hyperbolic structure: bounded, lineal named by a projective
// character class, or focal named by a ray index, together with the
// generating-set realization.
struct StructureDescriptor {
  enum class Kind { Bounded, Lineal, Focal };
  Kind kind = Kind::Bounded;
  std::optional<Character> character;  // Lineal
  int ray = 0;                         // Focal
  bool extended = false;               // realization carries the finite factor

  static StructureDescriptor bounded();
  static StructureDescriptor lineal(Character c);
  static StructureDescriptor focal(int ray);

  std::string realization(int arity) const;
  std::string id() const;  // "bounded" | "lineal_<hash>" | "focal_<i>"
};

enum class Classification { Loxodromic, NonLoxodromic };
Classification classify_element(const StructureDescriptor& s, const Element& g);

enum class Order { Less, Greater, Equal, Incomparable };
struct PosetContext {
  int arity;
  PermGroup group;
};
Order compare(const StructureDescriptor& a, const StructureDescriptor& b,
              const PosetContext& ctx);

// Extension of a structure of H_n to H_n ⋊ G when it is G-invariant;
// otherwise the violating generator (as cycle notation).
struct ExtendResult {
  std::optional<StructureDescriptor> extended;
  std::string violating_generator;
};
ExtendResult invariant_extend(int n, const PermGroup& g, const StructureDescriptor& s);

struct PosetNode {
  std::string id;
  StructureDescriptor descriptor;
};

struct Poset {
  PosetContext ctx;
  std::vector<PosetNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;  // (lower, higher), reduced

  std::string dot() const;
  nlohmann::ordered_json json() const;
};

// Nodes: bounded, the focal structures of the G-fixed rays, their dominated
// lineal classes, plus `lineal_sample` extra sampled G-invariant lineal
// classes when n >= 3. Edges: the domination order, transitively reduced.
Poset emit_poset(int n, const PermGroup& g, int lineal_sample, uint64_t seed = 0);

}  // namespace houghton
