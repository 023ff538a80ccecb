#include "qpbraid/garside.hpp"

#include <sstream>

#include "qpbraid/errors.hpp"

namespace qpbraid {

std::string_view render(Simple s) noexcept {
  switch (s) {
    case Simple::S1: return "s1";
    case Simple::S2: return "s2";
    case Simple::S1S2: return "s1 s2";
    case Simple::S2S1: return "s2 s1";
  }
  return "?";
}

void GarsideForm::push(Generator g, const Integer& n) {
  if (n == 0) return;
  if (syllables_.empty()) {
    first_ = g;
    syllables_.push_back(n);
  } else if (last_generator() == g) {
    syllables_.back() += n;
  } else {
    syllables_.push_back(n);
  }
}

// Q s_j^x s_i s_j^y = Q s_j^(x-1) D s_j^(y-1) = D flip(Q) s_i^(x-1) s_j^(y-1)
void GarsideForm::absorb_tail() {
  while (syllables_.size() >= 3 && syllables_[syllables_.size() - 2] == 1) {
    const std::size_t n = syllables_.size();
    const Generator gi = syllable_generator(n - 2);
    const Generator gj = swap_sigma(gi);
    const Integer x = syllables_[n - 3];
    const Integer y = syllables_[n - 1];
    syllables_.resize(n - 3);
    flip();
    delta_power_ += 1;
    push(gi, x - 1);
    push(gj, y - 1);
  }
}

void GarsideForm::multiply(Generator g, const Integer& exponent) {
  if (exponent == 0) return;
  if (g == Generator::Delta) {
    // P D^n = D^n flip^n(P)
    delta_power_ += exponent;
    if (is_odd(exponent)) flip();
    return;
  }
  if (exponent > 0) {
    push(g, exponent);
    absorb_tail();
    return;
  }

  Integer remaining = -exponent;
  if (!syllables_.empty() && last_generator() == g) {
    const Integer cancel = syllables_.back() < remaining ? syllables_.back() : remaining;
    syllables_.back() -= cancel;
    remaining -= cancel;
    if (syllables_.back() == 0) syllables_.pop_back();
  }
  if (remaining == 0) return;

  // P s_g^-1 = P s_h s_g D^-1 = D^-1 flip(P) s_g s_h  (h the other sigma).
  // flip(P) ends in s_g unless P is empty, so the tail never gains an interior
  // unit and repeated steps just append s_h syllables of exponent 2.
  const std::int64_t steps = checked_count(remaining);
  const Generator h = swap_sigma(g);
  syllables_.reserve(syllables_.size() + static_cast<std::size_t>(steps) + 1);
  for (std::int64_t i = 0; i < steps; ++i) {
    delta_power_ -= 1;
    flip();
    push(g, 1);
    push(h, 1);
  }
}

void GarsideForm::multiply(const BraidWord& w) {
  for (const auto& r : w.runs()) multiply(r.generator, r.exponent);
}

std::vector<Simple> GarsideForm::factors() const {
  checked_count(canonical_length());
  std::vector<Simple> out;
  // Walk letters; a factor is two letters when the next letter differs.
  std::size_t syl = 0;
  Integer used = 0;  // letters consumed from syllables_[syl]
  auto simple_of = [](Generator g) { return g == Generator::Sigma1 ? Simple::S1 : Simple::S2; };
  while (syl < syllables_.size()) {
    const Generator g = syllable_generator(syl);
    const Integer left = syllables_[syl] - used;
    if (left >= 2 || syl + 1 == syllables_.size()) {
      out.push_back(simple_of(g));
      used += 1;
      if (used == syllables_[syl]) {
        ++syl;
        used = 0;
      }
      continue;
    }
    // Last letter of this syllable pairs with the first of the next one.
    out.push_back(g == Generator::Sigma1 ? Simple::S1S2 : Simple::S2S1);
    ++syl;
    used = 1;
    if (used == syllables_[syl]) {
      ++syl;
      used = 0;
    }
  }
  return out;
}

Integer GarsideForm::canonical_length() const {
  // Each syllable boundary saves one factor, except where the next syllable
  // is consumed entirely by the pairing (impossible for interior syllables >= 2).
  Integer letters = 0;
  for (const auto& a : syllables_) letters += a;
  if (syllables_.size() <= 1) return letters;
  return letters - Integer(syllables_.size() - 1);
}

BraidWord GarsideForm::to_word() const {
  BraidWord w;
  w.append(Generator::Delta, delta_power_);
  for (std::size_t i = 0; i < syllables_.size(); ++i) w.append(syllable_generator(i), syllables_[i]);
  return w;
}

bool GarsideForm::operator==(const GarsideForm& other) const {
  if (delta_power_ != other.delta_power_ || syllables_ != other.syllables_) return false;
  return syllables_.empty() || first_ == other.first_;
}

std::size_t GarsideForm::hash() const noexcept {
  std::size_t h = hash_integer(delta_power_);
  if (!syllables_.empty()) h = h * 31 + static_cast<std::size_t>(first_);
  for (const auto& a : syllables_) h = h * 1000003u ^ hash_integer(a);
  return h;
}

GarsideForm garside_nf(const BraidWord& w) {
  GarsideForm f;
  f.multiply(w);
  return f;
}

bool equals(const BraidWord& u, const BraidWord& v) {
  if (exponent_sum(u) != exponent_sum(v)) return false;
  return garside_nf(u) == garside_nf(v);
}

std::string render(const GarsideForm& f) {
  if (f.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  if (f.delta_power() != 0) {
    out << "D^" << f.delta_power();
    first = false;
  }
  for (const auto s : f.factors()) {
    if (!first) out << " \xC2\xB7 ";
    out << render(s);
    first = false;
  }
  return out.str();
}

}  // namespace qpbraid
