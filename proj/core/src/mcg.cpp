#include "qpbraid/mcg.hpp"

#include <stdexcept>

#include "qpbraid/word_grammar.hpp"

namespace qpbraid {

namespace {

constexpr grammar::Alphabet kTwistAlphabet = {"a", "b", "d"};

}  // namespace

TwistWord::TwistWord(std::vector<TwistRun> runs) {
  for (const auto& r : runs) append(r.curve, r.exponent);
}

void TwistWord::append(Curve c, const Integer& exponent) {
  if (exponent == 0) return;
  if (!runs_.empty() && runs_.back().curve == c) {
    runs_.back().exponent += exponent;
    if (runs_.back().exponent == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({c, exponent});
}

void TwistWord::append(const TwistWord& t) {
  for (const auto& r : t.runs_) append(r.curve, r.exponent);
}

TwistWord parse_twist(std::string_view text) {
  TwistWord t;
  for (const auto& s : grammar::parse(text, kTwistAlphabet)) t.append(static_cast<Curve>(s.index), s.exponent);
  return t;
}

std::string render(const TwistWord& t) {
  if (t.empty()) return "1";
  std::vector<grammar::Symbol> runs;
  for (const auto& r : t.runs()) runs.push_back({static_cast<int>(r.curve), r.exponent});
  return grammar::render(runs, kTwistAlphabet);
}

TwistWord multiply(const TwistWord& x, const TwistWord& y) {
  TwistWord out = x;
  out.append(y);
  return out;
}

BraidWord psi_inverse(const TwistWord& t) {
  static const BraidWord kBoundaryTwist = power(parse_braid("s1 s2"), 6);
  BraidWord w;
  for (const auto& r : t.runs()) {
    switch (r.curve) {
      case Curve::Alpha: w.append(Generator::Sigma1, r.exponent); break;
      case Curve::Beta: w.append(Generator::Sigma2, r.exponent); break;
      case Curve::DeltaBoundary: w.append(power(kBoundaryTwist, r.exponent)); break;
    }
  }
  return w;
}

TwistWord psi(const BraidWord& w) {
  TwistWord t;
  const BraidWord letters = expand_delta(w);
  for (const auto& r : letters.runs()) {
    t.append(r.generator == Generator::Sigma1 ? Curve::Alpha : Curve::Beta, r.exponent);
  }
  return t;
}

TwistWord make_phi(const Integer& k) {
  if (k < 0) throw std::invalid_argument("family parameter k must be nonnegative");
  return TwistWord({{Curve::DeltaBoundary, 1}, {Curve::Alpha, 5}, {Curve::Beta, -(15 + k)}});
}

BraidWord make_beta(const Integer& k) { return psi_inverse(make_phi(k)); }

MonodromyVerdict classify_monodromy(const TwistWord& t, const SearchOptions& options) {
  MonodromyVerdict out{t, psi_inverse(t), {}};
  out.verdict = decide(out.braid_image, options);
  return out;
}

}  // namespace qpbraid
