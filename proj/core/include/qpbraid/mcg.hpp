#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qpbraid/integer.hpp"
#include "qpbraid/quasipositivity.hpp"
#include "qpbraid/word.hpp"

namespace qpbraid {

// Curves on the one-holed torus: a meridian, a longitude meeting it once, and
// the boundary-parallel curve.
enum class Curve : std::uint8_t { Alpha, Beta, DeltaBoundary };

struct TwistRun {
  Curve curve = Curve::Alpha;
  Integer exponent = 1;

  bool operator==(const TwistRun&) const = default;
};

// Word in the positive Dehn twists t_a, t_b, t_d, run-length normalized.
// Equality as mapping classes goes through braid images.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<TwistRun> runs);

  const std::vector<TwistRun>& runs() const noexcept { return runs_; }
  bool empty() const noexcept { return runs_.empty(); }

  void append(Curve c, const Integer& exponent);
  void append(const TwistWord& t);

  bool operator==(const TwistWord&) const = default;

 private:
  std::vector<TwistRun> runs_;
};

TwistWord parse_twist(std::string_view text);
std::string render(const TwistWord& t);

TwistWord multiply(const TwistWord& x, const TwistWord& y);

// t_a -> s1, t_b -> s2, t_d -> (s1 s2)^6 (the chain relation).
BraidWord psi_inverse(const TwistWord& t);

// s1 -> t_a, s2 -> t_b, after expanding D.
TwistWord psi(const BraidWord& w);

// t_d t_a^5 t_b^-(15+k); throws std::invalid_argument for k < 0.
TwistWord make_phi(const Integer& k);

// (s1 s2)^6 s1^5 s2^-(15+k), the braid preimage of make_phi(k).
BraidWord make_beta(const Integer& k);

struct MonodromyVerdict {
  TwistWord twist_word;
  BraidWord braid_image;
  PositivityVerdict verdict;  // QP here means the mapping class is a product of positive twists
};

MonodromyVerdict classify_monodromy(const TwistWord& t, const SearchOptions& options = {});

}  // namespace qpbraid
