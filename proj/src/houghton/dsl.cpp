#include "houghton/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "houghton/errors.hpp"

namespace houghton {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int arity;

  [[noreturn]] void fail(const std::string& what) const {
    throw usage_error("parse error at position " + std::to_string(pos) + ": " + what);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_int() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos + 1 < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos + 1]));
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }

  bool at_atom() {
    char c = peek();
    return c == '(' || c == 'i' || c == 't';
  }

  RayPoint point() {
    long long a = integer();
    if (peek() == ':') {
      ++pos;
      skip_ws();
      if (a < 1) fail("ray index must be >= 1");
      long long c = integer();
      if (c < 0) fail("ray coordinate must be >= 0");
      return {static_cast<int>(a), c};
    }
    if (arity < 2) fail("z-coordinates need arity >= 2");
    return z_to_point(a);
  }

  Element cycle_atom() {
    // opening '(' already consumed
    std::vector<RayPoint> pts;
    while (peek() != ')') {
      if (!at_int()) fail("expected cycle point");
      pts.push_back(point());
    }
    expect(')');
    return Element::from_cycles(arity, {pts});
  }

  Element atom() {
    char c = peek();
    if (c == 'i') {
      if (s.compare(pos, 2, "id") != 0) fail("unknown atom");
      pos += 2;
      return Element::identity(arity);
    }
    if (c == 't') {
      ++pos;
      expect('[');
      long long i = integer();
      expect(',');
      long long j = integer();
      expect(']');
      if (i < 1 || j < 1) fail("translation rays must be >= 1");
      return Element::translation(arity, static_cast<int>(i), static_cast<int>(j));
    }
    if (c == '(') {
      ++pos;
      if (at_atom()) {
        Element inner = elem();
        expect(')');
        return inner;
      }
      return cycle_atom();
    }
    fail("expected atom");
  }

  Element term() {
    Element a = atom();
    if (peek() == '^') {
      ++pos;
      return power(a, integer());
    }
    return a;
  }

  Element elem() {
    Element acc = term();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = compose(acc, term());
      } else if (at_atom()) {
        acc = compose(acc, term());
      } else {
        return acc;
      }
    }
  }

  Element run() {
    skip_ws();
    if (pos == s.size()) fail("empty input");
    Element g = elem();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return g;
  }
};

std::string point_text(RayPoint p, bool z_mode) {
  if (z_mode) {
    auto z = point_to_z(p);
    if (z) return std::to_string(*z);
  }
  return std::to_string(p.ray) + ":" + std::to_string(p.coord);
}

}  // namespace

Element parse_element(const std::string& text, int arity) {
  Parser p{text, 0, arity};
  return p.run();
}

std::string format_element(const Element& g) {
  if (g.is_identity()) return "id";
  int n = g.arity();
  bool z_mode = (n == 2);

  // Peel off a canonical word in the t[i,i+1] realizing the translation
  // vector; what remains is a finitely supported permutation.
  Element word = Element::identity(n);
  std::vector<long long> exps(static_cast<size_t>(n), 0);
  long long prefix = 0;
  for (int i = 1; i < n; ++i) {
    prefix += g.lambda(i);
    exps[static_cast<size_t>(i - 1)] = -prefix;
    if (prefix != 0)
      word = compose(word, Element::translation(n, i, i + 1, -prefix));
  }
  Element sigma = compose(g, inverse(word));

  std::string out;
  // Disjoint cycles of sigma, each rotated to start at its least point,
  // sorted by least point.
  std::vector<RayPoint> supp = sigma.support();
  std::set<RayPoint> left(supp.begin(), supp.end());
  while (!left.empty()) {
    RayPoint start = *left.begin();
    std::vector<RayPoint> cyc;
    RayPoint p = start;
    do {
      cyc.push_back(p);
      left.erase(p);
      p = sigma.apply(p);
    } while (!(p == start));
    if (!out.empty()) out += " ";
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += point_text(cyc[i], z_mode);
    }
    out += ")";
  }
  for (int i = 1; i < n; ++i) {
    long long e = exps[static_cast<size_t>(i - 1)];
    if (e == 0) continue;
    if (!out.empty()) out += " ";
    out += "t[" + std::to_string(i) + "," + std::to_string(i + 1) + "]";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace houghton
