#include "qpbraid/word.hpp"

#include <algorithm>
#include <functional>

#include "qpbraid/errors.hpp"
#include "qpbraid/word_grammar.hpp"

namespace qpbraid {

std::int64_t checked_count(const Integer& x, std::int64_t limit) {
  if (x < 0 || x > limit) {
    throw ResourceLimitError("count " + x.str() + " exceeds materialization limit " + std::to_string(limit));
  }
  return x.convert_to<std::int64_t>();
}

std::size_t hash_integer(const Integer& x) noexcept {
  std::size_t h = 0;
  for (const auto* limb = x.backend().limbs(); limb != x.backend().limbs() + x.backend().size(); ++limb) {
    h ^= std::hash<std::uint64_t>{}(static_cast<std::uint64_t>(*limb)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return x.sign() < 0 ? ~h : h;
}

namespace {

constexpr grammar::Alphabet kBraidAlphabet = {"s1", "s2", "D"};

}  // namespace

std::string_view generator_token(Generator g) noexcept {
  return kBraidAlphabet[static_cast<std::size_t>(g)];
}

BraidWord::BraidWord(std::vector<Run> runs) : runs_(free_reduce(std::move(runs)).runs_) {}

BraidWord BraidWord::generator(Generator g, Integer exponent) {
  BraidWord w;
  w.append(g, exponent);
  return w;
}

bool BraidWord::contains_delta() const noexcept {
  return std::any_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.generator == Generator::Delta; });
}

bool BraidWord::is_positive() const noexcept {
  return std::all_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.exponent > 0; });
}

bool BraidWord::is_negative() const noexcept {
  return std::all_of(runs_.begin(), runs_.end(), [](const Run& r) { return r.exponent < 0; });
}

Integer BraidWord::letter_count() const {
  Integer n = 0;
  for (const auto& r : runs_) n += abs(r.exponent);
  return n;
}

void BraidWord::append(Generator g, const Integer& exponent) {
  if (exponent == 0) return;
  if (!runs_.empty() && runs_.back().generator == g) {
    runs_.back().exponent += exponent;
    if (runs_.back().exponent == 0) runs_.pop_back();
    return;
  }
  runs_.push_back({g, exponent});
}

void BraidWord::append(const BraidWord& w) {
  for (const auto& r : w.runs_) append(r.generator, r.exponent);
}

BraidWord free_reduce(std::vector<Run> runs) {
  BraidWord w;
  for (auto& r : runs) w.append(r.generator, r.exponent);
  return w;
}

BraidWord parse_braid(std::string_view text) {
  BraidWord w;
  for (const auto& s : grammar::parse(text, kBraidAlphabet)) {
    w.append(static_cast<Generator>(s.index), s.exponent);
  }
  return w;
}

std::string render(const BraidWord& w) {
  if (w.empty()) return "1";
  std::vector<grammar::Symbol> runs;
  runs.reserve(w.size());
  for (const auto& r : w.runs()) runs.push_back({static_cast<int>(r.generator), r.exponent});
  return grammar::render(runs, kBraidAlphabet);
}

BraidWord expand_delta(const BraidWord& w) {
  BraidWord out;
  for (const auto& r : w.runs()) {
    if (r.generator != Generator::Delta) {
      out.append(r.generator, r.exponent);
      continue;
    }
    const int s = r.exponent.sign();
    const std::int64_t n = checked_count(abs(r.exponent), kMaterializeLimit / 3);
    for (std::int64_t i = 0; i < n; ++i) {
      out.append(Generator::Sigma1, s);
      out.append(Generator::Sigma2, s);
      out.append(Generator::Sigma1, s);
    }
  }
  return out;
}

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  BraidWord out = u;
  out.append(v);
  return out;
}

BraidWord invert(const BraidWord& u) {
  BraidWord out;
  for (auto it = u.runs().rbegin(); it != u.runs().rend(); ++it) out.append(it->generator, -it->exponent);
  return out;
}

BraidWord conjugate(const BraidWord& u, const BraidWord& g) {
  return multiply(multiply(invert(g), u), g);
}

BraidWord power(const BraidWord& u, const Integer& n) {
  if (n == 0 || u.empty()) return {};
  const BraidWord base = n < 0 ? invert(u) : u;
  const Integer count = abs(n);
  if (base.size() == 1) return BraidWord::generator(base.runs().front().generator, base.runs().front().exponent * count);
  checked_count(count * base.size());
  BraidWord out;
  for (Integer i = 0; i < count; ++i) out.append(base);
  return out;
}

Integer exponent_sum(const BraidWord& w) {
  Integer e = 0;
  for (const auto& r : w.runs()) e += r.exponent * letter_weight(r.generator);
  return e;
}

}  // namespace qpbraid
