#pragma once

#include <string>

#include "houghton/element.hpp"

namespace houghton {

// Element DSL:
//   elem  ::= term { ("*" | WS) term }
//   term  ::= atom ["^" int]
//   atom  ::= "id" | "t[" nat "," nat "]" | cycle | "(" elem ")"
//   cycle ::= "(" point { WS point } ")"
//   point ::= nat ":" nat | int            (bare ints are z-coords, rays 1,2)
// Juxtaposition composes, rightmost factor applied first.
Element parse_element(const std::string& text, int arity);

// Canonical text form; parse_element(format_element(g), g.arity()) == g.
// Arity-2 elements print cycle points as z-coords, larger arities as ray:coord.
std::string format_element(const Element& g);

}  // namespace houghton
