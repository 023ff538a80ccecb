#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qpbraid/integer.hpp"

namespace qpbraid::grammar {

// Shared exponent/grouping syntax for braid and twist words:
//   word   := item*
//   item   := atom ('^' int)?
//   atom   := token | '(' word ')'
// Whitespace, '*' and the middle dot separate items.
struct Symbol {
  int index = 0;
  Integer exponent;

  bool operator==(const Symbol&) const = default;
};

using Alphabet = std::array<std::string_view, 3>;

// Returns a freely reduced run list (adjacent symbols differ, no zero exponents).
std::vector<Symbol> parse(std::string_view text, const Alphabet& alphabet);

std::string render(const std::vector<Symbol>& runs, const Alphabet& alphabet);

// Merges adjacent equal symbols and drops zero exponents.
void push_run(std::vector<Symbol>& runs, int index, const Integer& exponent);

}  // namespace qpbraid::grammar
