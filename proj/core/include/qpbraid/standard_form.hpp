#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpbraid/integer.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

// D^p s1^a1 s2^a2 s1^a3 ... with every ai > 0, together with a conjugator g
// such that realize() equals g^-1 * original * g.
struct StandardForm {
  Integer p = 0;
  std::vector<Integer> syllables;
  BraidWord conjugator;

  std::size_t m() const noexcept { return syllables.size(); }
  BraidWord realize() const;
  // 3p + sum ai
  Integer exponent_sum() const;

  bool operator==(const StandardForm&) const = default;
};

enum class ReducedCase {
  M01,        // m <= 1
  TwoUnits,   // m = 2, a1 = a2 = 1, p even
  AllGeqTwo,  // m = p mod 2, every ai >= 2
};

int case_number(ReducedCase c) noexcept;
std::string_view case_name(ReducedCase c) noexcept;

// The defining predicate of one case, evaluated on raw data.
bool satisfies(ReducedCase c, const Integer& p, const std::vector<Integer>& syllables);
// First case (in M01, TwoUnits, AllGeqTwo order) whose predicate holds.
std::optional<ReducedCase> reduced_case(const Integer& p, const std::vector<Integer>& syllables);

struct ReducedStandardForm {
  StandardForm base;
  ReducedCase case_tag = ReducedCase::M01;

  bool operator==(const ReducedStandardForm&) const = default;
};

// Collects Delta factors on the left (the left-greedy normal form does exactly
// that and also absorbs every s_i s_j s_i), then conjugates by D when the
// first syllable is a power of s2.
StandardForm to_standard_form(const BraidWord& w);

// Conjugates into one of the three reduced cases. Throws NotReducedError if
// the moves stall, which the move set is not expected to do.
ReducedStandardForm reduce_standard_form(const StandardForm& sf);

inline ReducedStandardForm reduce(const BraidWord& w) { return reduce_standard_form(to_standard_form(w)); }

// realize() == conjugate(original, conjugator) as group elements.
bool verify_witness(const StandardForm& sf, const BraidWord& original);

std::string render(const StandardForm& sf);

}  // namespace qpbraid
