#include "houghton/permgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "houghton/errors.hpp"

namespace houghton {

Perm PermGroup::parse_perm(int degree, const std::string& text) {
  Perm p(static_cast<size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) return p;  // "" or "()" style: identity
  std::set<int> seen;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw usage_error("cycle notation: expected '('");
    ++pos;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw usage_error("cycle notation: expected point");
      int v = std::stoi(text.substr(start, pos - start));
      if (v < 1 || v > degree)
        throw usage_error("cycle notation: point " + std::to_string(v) + " out of degree " +
                          std::to_string(degree));
      if (!seen.insert(v).second)
        throw usage_error("cycle notation: point " + std::to_string(v) + " repeated");
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p[static_cast<size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

std::string PermGroup::perm_str(const Perm& p) {
  std::string out;
  std::vector<bool> used(p.size(), false);
  for (size_t s = 0; s < p.size(); ++s) {
    if (used[s] || p[s] == static_cast<int>(s)) continue;
    out += "(";
    size_t c = s;
    bool first = true;
    do {
      if (!first) out += " ";
      first = false;
      out += std::to_string(c + 1);
      used[c] = true;
      c = static_cast<size_t>(p[c]);
    } while (c != s);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

void PermGroup::add_generator(Perm p) {
  if (degree_ > 12) throw usage_error("permutation groups limited to degree <= 12");
  if (p.size() != static_cast<size_t>(degree_))
    throw usage_error("generator degree mismatch");
  Perm sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k)) throw usage_error("generator is not a permutation");
  bool ident = true;
  for (size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) ident = false;
  if (!ident) gens_.push_back(std::move(p));
}

std::vector<Perm> PermGroup::elements(size_t cap) const {
  Perm id(static_cast<size_t>(degree_));
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens_) {
        Perm y(x.size());
        for (size_t k = 0; k < x.size(); ++k) y[k] = g[static_cast<size_t>(x[k])];
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw budget_error("permutation group closure too large");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> PermGroup::fixed_points() const {
  std::vector<int> out;
  for (int v = 0; v < degree_; ++v) {
    bool fixed = true;
    for (const Perm& g : gens_)
      if (g[static_cast<size_t>(v)] != v) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(v + 1);
  }
  return out;
}

std::string PermGroup::str() const {
  if (gens_.empty()) return "1";
  std::string out = "<";
  for (size_t k = 0; k < gens_.size(); ++k) out += (k ? ", " : "") + perm_str(gens_[k]);
  return out + ">";
}

PermGroup fixator(int n, int k) {
  if (k < 0 || n <= k + 1)
    throw usage_error("fixator needs 0 <= k and n > k+1");
  PermGroup g(n);
  for (int v = k + 1; v < n; ++v) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[static_cast<size_t>(v - 1)], p[static_cast<size_t>(v)]);
    g.add_generator(std::move(p));
  }
  return g;
}

std::vector<int> focal_set(int n, const PermGroup& g) {
  if (n < 2) throw usage_error("focal_set needs n >= 2");
  if (g.degree() != n) throw usage_error("focal_set: group degree mismatch");
  return g.fixed_points();
}

}  // namespace houghton
