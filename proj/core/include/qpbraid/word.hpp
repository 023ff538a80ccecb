#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpbraid/integer.hpp"

namespace qpbraid {

// Delta is the half twist s1 s2 s1 = s2 s1 s2, kept as a letter of its own.
enum class Generator : std::uint8_t { Sigma1, Sigma2, Delta };

// Sigma1 <-> Sigma2; Delta is fixed. This is conjugation by Delta.
constexpr Generator swap_sigma(Generator g) noexcept {
  switch (g) {
    case Generator::Sigma1: return Generator::Sigma2;
    case Generator::Sigma2: return Generator::Sigma1;
    case Generator::Delta: return Generator::Delta;
  }
  return g;
}

// Letter weight in the exponent sum: Delta has length three.
constexpr int letter_weight(Generator g) noexcept { return g == Generator::Delta ? 3 : 1; }

std::string_view generator_token(Generator g) noexcept;

struct Letter {
  Generator generator = Generator::Sigma1;
  int sign = 1;  // +1 or -1

  bool operator==(const Letter&) const = default;
};

// One run-length entry: generator^exponent with exponent != 0.
struct Run {
  Generator generator = Generator::Sigma1;
  Integer exponent = 1;

  Letter letter() const { return {generator, exponent.sign() < 0 ? -1 : 1}; }
  bool operator==(const Run&) const = default;
};

// A free word in s1, s2, D in run-length form. Adjacent runs always carry
// different generators and no exponent is zero; the empty word is the
// identity. Equality here is syntactic; use equals() for group equality.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(std::vector<Run> runs);

  static BraidWord generator(Generator g, Integer exponent = 1);
  static BraidWord delta(Integer exponent = 1) { return generator(Generator::Delta, std::move(exponent)); }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }
  std::size_t size() const noexcept { return runs_.size(); }

  bool contains_delta() const noexcept;
  bool is_positive() const noexcept;
  bool is_negative() const noexcept;

  // Number of letters, Delta counting once.
  Integer letter_count() const;

  // Appends a run, merging with the last run when generators agree.
  void append(Generator g, const Integer& exponent);
  void append(const BraidWord& w);

  bool operator==(const BraidWord&) const = default;

 private:
  std::vector<Run> runs_;
};

BraidWord free_reduce(std::vector<Run> runs);

BraidWord parse_braid(std::string_view text);

// Grammar-conformant text; periodic blocks are written as (...)^n.
std::string render(const BraidWord& w);

// D^{+1} -> s1 s2 s1, D^{-1} -> s1^-1 s2^-1 s1^-1.
BraidWord expand_delta(const BraidWord& w);

BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& u);
// g^-1 u g
BraidWord conjugate(const BraidWord& u, const BraidWord& g);
BraidWord power(const BraidWord& u, const Integer& n);

inline BraidWord operator*(const BraidWord& u, const BraidWord& v) { return multiply(u, v); }

Integer exponent_sum(const BraidWord& w);

}  // namespace qpbraid
