#include "houghton/poset.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

StructureDescriptor StructureDescriptor::bounded() { return {}; }

StructureDescriptor StructureDescriptor::lineal(Character c) {
  StructureDescriptor s;
  s.kind = Kind::Lineal;
  s.character = std::move(c);
  return s;
}

StructureDescriptor StructureDescriptor::focal(int ray) {
  StructureDescriptor s;
  s.kind = Kind::Focal;
  s.ray = ray;
  return s;
}

std::string StructureDescriptor::realization(int arity) const {
  std::string suffix = extended ? " ∪ G" : "";
  switch (kind) {
    case Kind::Bounded:
      return extended ? "H_" + std::to_string(arity) + " ⋊ G" : "H_" + std::to_string(arity);
    case Kind::Focal:
      return "Fix(R_" + std::to_string(ray) + ") ∪ T" + suffix;
    case Kind::Lineal: {
      for (int r = 1; r <= character->arity(); ++r)
        if (*character == Character::lambda(character->arity(), r))
          return "ker(λ_" + std::to_string(r) + ") ∪ T" + suffix;
      return "φ^{-1}([-C,C]) ∪ T" + suffix + ", φ=" + character->str();
    }
  }
  return "?";
}

std::string StructureDescriptor::id() const {
  switch (kind) {
    case Kind::Bounded:
      return "bounded";
    case Kind::Focal:
      return "focal_" + std::to_string(ray);
    case Kind::Lineal:
      return "lineal_" + character->hash_tag();
  }
  return "?";
}

Classification classify_element(const StructureDescriptor& s, const Element& g) {
  switch (s.kind) {
    case StructureDescriptor::Kind::Bounded:
      return Classification::NonLoxodromic;
    case StructureDescriptor::Kind::Focal:
      return g.lambda(s.ray) != 0 ? Classification::Loxodromic : Classification::NonLoxodromic;
    case StructureDescriptor::Kind::Lineal:
      return !s.character->eval(g).is_zero() ? Classification::Loxodromic
                                             : Classification::NonLoxodromic;
  }
  return Classification::NonLoxodromic;
}

namespace {

void check_valid(const StructureDescriptor& s, const PosetContext& ctx) {
  switch (s.kind) {
    case StructureDescriptor::Kind::Bounded:
      return;
    case StructureDescriptor::Kind::Focal: {
      auto fixed = focal_set(ctx.arity, ctx.group);
      if (std::find(fixed.begin(), fixed.end(), s.ray) == fixed.end())
        throw usage_error("focal structure on ray " + std::to_string(s.ray) +
                          " invalid: ray not fixed by the group");
      return;
    }
    case StructureDescriptor::Kind::Lineal:
      if (s.character->arity() != ctx.arity)
        throw usage_error("lineal structure arity mismatch");
      return;
  }
}

}  // namespace

Order compare(const StructureDescriptor& a, const StructureDescriptor& b,
              const PosetContext& ctx) {
  check_valid(a, ctx);
  check_valid(b, ctx);
  using K = StructureDescriptor::Kind;
  if (a.kind == b.kind) {
    if (a.kind == K::Bounded) return Order::Equal;
    if (a.kind == K::Focal) return a.ray == b.ray ? Order::Equal : Order::Incomparable;
    return char_equiv(*a.character, *b.character) ? Order::Equal : Order::Incomparable;
  }
  if (a.kind == K::Bounded) return Order::Less;
  if (b.kind == K::Bounded) return Order::Greater;
  // focal vs lineal: focal dominates exactly the class of its own lambda
  const StructureDescriptor& focal = a.kind == K::Focal ? a : b;
  const StructureDescriptor& lineal = a.kind == K::Focal ? b : a;
  bool dominated = char_equiv(*lineal.character, Character::lambda(ctx.arity, focal.ray));
  if (!dominated) return Order::Incomparable;
  return a.kind == K::Focal ? Order::Greater : Order::Less;
}

ExtendResult invariant_extend(int n, const PermGroup& g, const StructureDescriptor& s) {
  ExtendResult out;
  switch (s.kind) {
    case StructureDescriptor::Kind::Bounded:
      break;
    case StructureDescriptor::Kind::Focal:
      for (const Perm& p : g.generators())
        if (p[static_cast<size_t>(s.ray - 1)] != s.ray - 1) {
          out.violating_generator = PermGroup::perm_str(p);
          return out;
        }
      break;
    case StructureDescriptor::Kind::Lineal:
      if (s.character->arity() != n) throw usage_error("invariant_extend: arity mismatch");
      for (const Perm& p : g.generators())
        if (!char_equiv(s.character->permuted(p), *s.character)) {
          out.violating_generator = PermGroup::perm_str(p);
          return out;
        }
      break;
  }
  StructureDescriptor e = s;
  e.extended = !g.is_trivial();
  out.extended = std::move(e);
  return out;
}

Poset emit_poset(int n, const PermGroup& g, int lineal_sample, uint64_t seed) {
  if (n < 2) throw usage_error("emit_poset needs n >= 2");
  Poset poset{{n, g}, {}, {}};

  std::vector<StructureDescriptor> descs;
  descs.push_back(StructureDescriptor::bounded());
  std::vector<Character> lineals;
  for (int i : focal_set(n, g)) {
    descs.push_back(StructureDescriptor::focal(i));
    Character li = Character::lambda(n, i);
    if (std::find(lineals.begin(), lineals.end(), li) == lineals.end()) lineals.push_back(li);
  }
  if (n >= 3 && lineal_sample > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-3, 3);
    std::uniform_int_distribution<long long> den(1, 3);
    std::vector<Perm> group_elems = g.elements();
    int found = 0;
    for (int attempt = 0; attempt < 64 * lineal_sample && found < lineal_sample; ++attempt) {
      std::vector<Rational> c;
      c.reserve(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) c.emplace_back(num(rng), den(rng));
      // symmetrize over the group so the class is invariant
      std::vector<Rational> sym(static_cast<size_t>(n), Rational(0));
      for (const Perm& p : group_elems)
        for (size_t pre = 0; pre < p.size(); ++pre)
          sym[static_cast<size_t>(p[pre])] = sym[static_cast<size_t>(p[pre])] + c[pre];
      try {
        Character cand(n, sym);
        if (std::find(lineals.begin(), lineals.end(), cand) == lineals.end()) {
          lineals.push_back(cand);
          ++found;
        }
      } catch (const usage_error&) {
        // symmetrization collapsed to the zero class; draw again
      }
    }
  }
  for (const auto& c : lineals) descs.push_back(StructureDescriptor::lineal(c));

  for (auto& d : descs) {
    auto ext = invariant_extend(n, g, d);
    if (!ext.extended)
      throw violation_error("emit_poset: emitted structure not invariant under " +
                            ext.violating_generator);
    poset.nodes.push_back({ext.extended->id(), *ext.extended});
  }
  std::sort(poset.nodes.begin(), poset.nodes.end(),
            [](const PosetNode& a, const PosetNode& b) { return a.id < b.id; });

  // domination order, transitively reduced
  size_t m = poset.nodes.size();
  std::vector<std::vector<bool>> less(m, std::vector<bool>(m, false));
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y)
      if (x != y &&
          compare(poset.nodes[x].descriptor, poset.nodes[y].descriptor, poset.ctx) == Order::Less)
        less[x][y] = true;
  for (size_t x = 0; x < m; ++x)
    for (size_t y = 0; y < m; ++y) {
      if (!less[x][y]) continue;
      bool covered = false;
      for (size_t z = 0; z < m && !covered; ++z)
        if (less[x][z] && less[z][y]) covered = true;
      if (!covered) poset.edges.push_back({poset.nodes[x].id, poset.nodes[y].id});
    }
  std::sort(poset.edges.begin(), poset.edges.end());
  return poset;
}

std::string Poset::dot() const {
  std::string out = "digraph houghton_poset {\n  rankdir=BT;\n";
  for (const auto& node : nodes) {
    std::string kind = node.descriptor.kind == StructureDescriptor::Kind::Bounded ? "bounded"
                       : node.descriptor.kind == StructureDescriptor::Kind::Focal ? "focal"
                                                                                  : "lineal";
    out += "  " + node.id + " [label=\"" + kind + "\\n" +
           node.descriptor.realization(ctx.arity) + "\"];\n";
  }
  for (const auto& e : edges) out += "  " + e.first + " -> " + e.second + ";\n";
  out += "}\n";
  return out;
}

nlohmann::ordered_json Poset::json() const {
  nlohmann::ordered_json j;
  j["schema"] = "houghton/1";
  j["n"] = ctx.arity;
  j["group"] = ctx.group.str();
  j["non_oriented_excluded"] = true;
  auto nodes_json = nlohmann::ordered_json::array();
  for (const auto& node : nodes) {
    nlohmann::ordered_json nj;
    nj["id"] = node.id;
    nj["kind"] = node.descriptor.kind == StructureDescriptor::Kind::Bounded ? "bounded"
                 : node.descriptor.kind == StructureDescriptor::Kind::Focal ? "focal"
                                                                            : "lineal";
    nj["realization"] = node.descriptor.realization(ctx.arity);
    if (node.descriptor.kind == StructureDescriptor::Kind::Lineal)
      nj["char"] = node.descriptor.character->str();
    nodes_json.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes_json);
  auto edges_json = nlohmann::ordered_json::array();
  for (const auto& e : edges) edges_json.push_back({e.first, e.second});
  j["edges"] = std::move(edges_json);
  return j;
}

}  // namespace houghton
