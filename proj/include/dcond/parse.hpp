#pragma once

#include <stdexcept>
#include <string>

#include "dcond/poly.hpp"

namespace dcond {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Expression grammar: integers, rationals a/b, declared variables,
// + - * ^ ( ), unary minus. No implicit juxtaposition.
Poly parse_poly(const std::string& text, const RingPtr& ring);

// Canonical rendering; parse_poly(print_poly(p)) == p.
std::string print_poly(const Poly& p);

std::string print_monomial(const RingPtr& ring, const Expvec& ev);

}  // namespace dcond
