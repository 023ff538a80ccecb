#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpbraid/integer.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

// Proper simple elements of B3 (identity and Delta excluded).
enum class Simple : std::uint8_t { S1, S2, S1S2, S2S1 };

std::string_view render(Simple s) noexcept;

// Left-greedy normal form D^p x1 ... xl.
//
// The Delta-free positive tail of a B3 element has exactly one positive word
// representative, an alternating product of syllables whose interior exponents
// are all >= 2 (a unit interior syllable would spell s_i s_j s_i = D). The form
// stores that tail run-length encoded; factors() recovers the simple factors.
class GarsideForm {
 public:
  GarsideForm() = default;

  const Integer& delta_power() const noexcept { return delta_power_; }
  // Generator of the first syllable; meaningless when the tail is empty.
  Generator first_generator() const noexcept { return first_; }
  const std::vector<Integer>& syllables() const noexcept { return syllables_; }
  Generator syllable_generator(std::size_t i) const noexcept {
    return (i % 2 == 0) ? first_ : swap_sigma(first_);
  }

  bool is_identity() const noexcept { return delta_power_ == 0 && syllables_.empty(); }
  bool is_delta_power() const noexcept { return syllables_.empty(); }

  // Simple factors after the Delta power, left-weighted.
  std::vector<Simple> factors() const;
  // Number of simple factors, computed without materializing them.
  Integer canonical_length() const;

  BraidWord to_word() const;

  bool operator==(const GarsideForm& other) const;
  std::size_t hash() const noexcept;

  // Right multiplication by a single run; the workhorse of garside_nf.
  void multiply(Generator g, const Integer& exponent);
  void multiply(const BraidWord& w);

 private:
  void push(Generator g, const Integer& n);
  void absorb_tail();
  void flip() noexcept { first_ = swap_sigma(first_); }
  Generator last_generator() const noexcept { return syllable_generator(syllables_.size() - 1); }

  Integer delta_power_ = 0;
  Generator first_ = Generator::Sigma1;
  std::vector<Integer> syllables_;
};

GarsideForm garside_nf(const BraidWord& w);

bool equals(const BraidWord& u, const BraidWord& v);

// "D^p · s1 s2 · s2"; the identity renders as "1". Parses back to the element.
std::string render(const GarsideForm& f);

struct GarsideFormHash {
  std::size_t operator()(const GarsideForm& f) const noexcept { return f.hash(); }
};

}  // namespace qpbraid
