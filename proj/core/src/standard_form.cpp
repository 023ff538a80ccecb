#include "qpbraid/standard_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpbraid/errors.hpp"
#include "qpbraid/garside.hpp"

namespace qpbraid {

BraidWord StandardForm::realize() const {
  BraidWord w = BraidWord::delta(p);
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    w.append(i % 2 == 0 ? Generator::Sigma1 : Generator::Sigma2, syllables[i]);
  }
  return w;
}

Integer StandardForm::exponent_sum() const {
  Integer e = 3 * p;
  for (const auto& a : syllables) e += a;
  return e;
}

int case_number(ReducedCase c) noexcept {
  switch (c) {
    case ReducedCase::M01: return 1;
    case ReducedCase::TwoUnits: return 2;
    case ReducedCase::AllGeqTwo: return 3;
  }
  return 0;
}

std::string_view case_name(ReducedCase c) noexcept {
  switch (c) {
    case ReducedCase::M01: return "M01";
    case ReducedCase::TwoUnits: return "TwoUnits";
    case ReducedCase::AllGeqTwo: return "AllGeqTwo";
  }
  return "?";
}

bool satisfies(ReducedCase c, const Integer& p, const std::vector<Integer>& a) {
  switch (c) {
    case ReducedCase::M01:
      return a.size() <= 1;
    case ReducedCase::TwoUnits:
      return a.size() == 2 && a[0] == 1 && a[1] == 1 && !is_odd(p);
    case ReducedCase::AllGeqTwo:
      return is_odd(p) == (a.size() % 2 == 1) &&
             std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 2; });
  }
  return false;
}

std::optional<ReducedCase> reduced_case(const Integer& p, const std::vector<Integer>& a) {
  for (const auto c : {ReducedCase::M01, ReducedCase::TwoUnits, ReducedCase::AllGeqTwo}) {
    if (satisfies(c, p, a)) return c;
  }
  return std::nullopt;
}

namespace {

// Working state: a normal form plus the accumulated conjugator.
struct Conjugacy {
  GarsideForm form;
  BraidWord conjugator;

  void conjugate_by(const BraidWord& h) {
    form = garside_nf(conjugate(form.to_word(), h));
    conjugator = multiply(conjugator, h);
  }

  void lead_with_sigma1() {
    if (!form.syllables().empty() && form.first_generator() == Generator::Sigma2) {
      conjugate_by(BraidWord::delta());
    }
  }

  // Moves the last `count` letters of the tail to the front, past D^p.
  void rotate_suffix(const Integer& count) {
    const auto& a = form.syllables();
    BraidWord suffix;
    Integer left = count;
    for (std::size_t i = a.size(); i-- > 0 && left > 0;) {
      const Integer take = a[i] < left ? a[i] : left;
      suffix = multiply(BraidWord::generator(form.syllable_generator(i), take), suffix);
      left -= take;
    }
    conjugate_by(invert(suffix));
  }

  void rotate_last_syllable() { rotate_suffix(form.syllables().back()); }
  void rotate_last_letter() { rotate_suffix(1); }

  StandardForm standard() const {
    return {form.delta_power(), form.syllables(), conjugator};
  }
};

// Among the cyclic rotations of an AllGeqTwo tail, picks the greatest tuple.
std::size_t best_rotation(const std::vector<Integer>& a) {
  const std::size_t m = a.size();
  std::size_t best = 0;
  auto rotated_less = [&](std::size_t r, std::size_t s) {
    // Rotation by r moves the last r syllables to the front.
    for (std::size_t i = 0; i < m; ++i) {
      const auto& x = a[(i + m - r) % m];
      const auto& y = a[(i + m - s) % m];
      if (x != y) return x < y;
    }
    return false;
  };
  for (std::size_t r = 1; r < m; ++r) {
    if (rotated_less(best, r)) best = r;
  }
  return best;
}

}  // namespace

StandardForm to_standard_form(const BraidWord& w) {
  Conjugacy state{garside_nf(w), {}};
  state.lead_with_sigma1();
  return state.standard();
}

ReducedStandardForm reduce_standard_form(const StandardForm& sf) {
  if (std::any_of(sf.syllables.begin(), sf.syllables.end(), [](const Integer& x) { return x <= 0; })) {
    throw std::invalid_argument("standard form syllables must be positive");
  }
  const BraidWord start = sf.realize();
  Conjugacy state{garside_nf(start), {}};

  const std::size_t max_steps = 64 + 8 * sf.m();
  for (std::size_t step = 0; step < max_steps; ++step) {
    state.lead_with_sigma1();
    const auto& a = state.form.syllables();
    const Integer& p = state.form.delta_power();
    const std::size_t m = a.size();

    std::optional<ReducedCase> done;
    if (m <= 1) {
      done = ReducedCase::M01;
    } else if (is_odd(p) != (m % 2 == 1)) {
      // The last syllable crosses D^p and lands on the first one's generator.
      state.rotate_last_syllable();
      continue;
    } else if (m == 2 && a[0] == 1 && a[1] == 1) {
      done = ReducedCase::TwoUnits;
    } else if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x >= 2; })) {
      const std::size_t r = best_rotation(a);
      if (r != 0) {
        Integer letters = 0;
        for (std::size_t i = m - r; i < m; ++i) letters += a[i];
        state.rotate_suffix(letters);
        state.lead_with_sigma1();
      }
      done = ReducedCase::AllGeqTwo;
    } else {
      // A unit sits at an end of the tail; rotating one letter makes it
      // interior, where the normal form turns s_i s_j s_i into D.
      state.rotate_last_letter();
      continue;
    }

    ReducedStandardForm out{state.standard(), *done};
    if (!satisfies(out.case_tag, out.base.p, out.base.syllables) ||
        !equals(out.base.realize(), conjugate(start, state.conjugator))) {
      throw std::logic_error("reduced standard form failed its own witness check");
    }
    out.base.conjugator = multiply(sf.conjugator, state.conjugator);
    return out;
  }
  throw NotReducedError("conjugation moves did not reach a reduced case for " + render(start));
}

bool verify_witness(const StandardForm& sf, const BraidWord& original) {
  return equals(sf.realize(), conjugate(original, sf.conjugator));
}

std::string render(const StandardForm& sf) { return render(sf.realize()); }

}  // namespace qpbraid
