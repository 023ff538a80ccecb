#include <doctest.h>

#include <algorithm>

#include "qpbraid/errors.hpp"
#include "qpbraid/garside.hpp"
#include "qpbraid/standard_form.hpp"
#include "random_words.hpp"

using namespace qpbraid;

namespace {

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

std::vector<Integer> sorted(std::vector<Integer> a) {
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

TEST_CASE("standard form examples") {
  const BraidWord beta0 = parse_braid("(s1 s2)^6 s1^5 s2^-15");
  const StandardForm sf = to_standard_form(beta0);
  CHECK(verify_witness(sf, beta0));
  CHECK(equals(sf.realize(), conjugate(parse_braid("D^4 s1^5 s2^-15"), sf.conjugator)));

  const StandardForm id = to_standard_form(BraidWord{});
  CHECK(id.p == 0);
  CHECK(id.m() == 0);
  CHECK(id.conjugator.empty());

  const BraidWord s2inv = parse_braid("s2^-1");
  const StandardForm x = to_standard_form(s2inv);
  CHECK(x.p == -1);
  CHECK(x.syllables == ints({1, 1}));
  CHECK(verify_witness(x, s2inv));
}

TEST_CASE("m = 0 exactly for powers of D") {
  for (int p = -6; p <= 6; ++p) {
    const StandardForm sf = to_standard_form(BraidWord::delta(p));
    CHECK(sf.p == p);
    CHECK(sf.m() == 0);
  }
  CHECK(to_standard_form(parse_braid("(s1 s2)^3 s1 s2 s1")).p == 3);
  CHECK(to_standard_form(parse_braid("(s1 s2)^3 s1 s2 s1")).m() == 0);
  CHECK(to_standard_form(parse_braid("s1")).m() == 1);
}

TEST_CASE("reduction of beta_0") {
  const BraidWord beta0 = parse_braid("(s1 s2)^6 s1^5 s2^-15");
  const ReducedStandardForm rf = reduce(beta0);
  CHECK(rf.base.p == -11);
  CHECK(rf.base.m() == 15);
  CHECK(rf.case_tag == ReducedCase::AllGeqTwo);
  CHECK(case_number(rf.case_tag) == 3);
  std::vector<Integer> expected{7};
  for (int i = 0; i < 14; ++i) expected.push_back(2);
  CHECK(rf.base.syllables == expected);
  CHECK(rf.base.exponent_sum() == 2);
  CHECK(render(rf.base) == "D^-11 s1^7 (s2^2 s1^2)^7");
  CHECK(verify_witness(rf.base, beta0));
}

TEST_CASE("reduction examples") {
  const ReducedStandardForm d5 = reduce(parse_braid("D^5"));
  CHECK(d5.base.p == 5);
  CHECK(d5.base.m() == 0);
  CHECK(d5.case_tag == ReducedCase::M01);

  const BraidWord s1inv = parse_braid("s1^-1");
  const StandardForm sf = to_standard_form(s1inv);
  CHECK(sf.p == -1);
  CHECK(sf.syllables == ints({1, 1}));
  const ReducedStandardForm rf = reduce_standard_form(sf);
  CHECK(rf.base.p == -1);
  CHECK(rf.base.syllables == ints({2}));
  CHECK(rf.case_tag == ReducedCase::M01);
  CHECK(verify_witness(rf.base, s1inv));
  CHECK(equals(parse_braid("s2 D^-1 s1"), parse_braid("D^-1 s1^2")));

  const ReducedStandardForm two = reduce(parse_braid("D^2 s1 s2"));
  CHECK(two.case_tag == ReducedCase::TwoUnits);
  CHECK(two.base.syllables == ints({1, 1}));
}

TEST_CASE("case predicates") {
  CHECK(satisfies(ReducedCase::M01, 3, ints({4})));
  CHECK(satisfies(ReducedCase::TwoUnits, 2, ints({1, 1})));
  CHECK_FALSE(satisfies(ReducedCase::TwoUnits, -1, ints({1, 1})));
  CHECK(satisfies(ReducedCase::AllGeqTwo, -11, ints({7, 2, 2})));
  CHECK_FALSE(satisfies(ReducedCase::AllGeqTwo, -10, ints({7, 2, 2})));
  CHECK_FALSE(satisfies(ReducedCase::AllGeqTwo, 0, ints({2, 1})));
  CHECK(reduced_case(0, ints({1, 2, 1})) == std::nullopt);
  CHECK(reduced_case(1, ints({3})) == ReducedCase::M01);
}

TEST_CASE("invalid standard form input") {
  CHECK_THROWS_AS(reduce_standard_form(StandardForm{0, ints({2, 0}), {}}), std::invalid_argument);
}

TEST_CASE("big exponents reduce exactly") {
  const Integer big("100000000000000000000");
  BraidWord w = BraidWord::delta(-7);
  w.append(Generator::Sigma1, big);
  w.append(Generator::Sigma2, 5);
  const ReducedStandardForm rf = reduce(w);
  CHECK(rf.base.exponent_sum() == exponent_sum(w));
  CHECK(verify_witness(rf.base, w));
}

TEST_CASE("property: witness soundness, case soundness, e-preservation") {
  std::mt19937_64 rng(0x5eed0004);
  int not_reduced = 0;
  for (int i = 0; i < 10000; ++i) {
    const BraidWord w = testing::random_word(rng, 30);
    const StandardForm sf = to_standard_form(w);
    REQUIRE(verify_witness(sf, w));
    CHECK((sf.m() == 0) == garside_nf(w).is_delta_power());
    try {
      const ReducedStandardForm rf = reduce_standard_form(sf);
      CHECK(verify_witness(rf.base, w));
      CHECK(satisfies(rf.case_tag, rf.base.p, rf.base.syllables));
      CHECK(reduced_case(rf.base.p, rf.base.syllables) == rf.case_tag);
      CHECK(rf.base.exponent_sum() == exponent_sum(w));
      CHECK(exponent_sum(rf.base.realize()) == exponent_sum(w));
      if (rf.base.m() >= 1) CHECK(rf.base.syllables.front() >= 1);
    } catch (const NotReducedError&) {
      ++not_reduced;
    }
  }
  CHECK(not_reduced == 0);
}

TEST_CASE("property: idempotence and determinism") {
  std::mt19937_64 rng(0x5eed0005);
  for (int i = 0; i < 3000; ++i) {
    const BraidWord w = testing::random_word(rng, 30);
    const ReducedStandardForm rf = reduce(w);
    CHECK(reduce(w) == rf);
    StandardForm again = rf.base;
    again.conjugator = {};
    const ReducedStandardForm rf2 = reduce_standard_form(again);
    CHECK(rf2.case_tag == rf.case_tag);
    CHECK(rf2.base.p == rf.base.p);
    CHECK(sorted(rf2.base.syllables) == sorted(rf.base.syllables));
    CHECK(verify_witness(rf2.base, rf.base.realize()));
  }
}

TEST_CASE("property: conjugates reduce to the same p and m") {
  std::mt19937_64 rng(0x5eed0006);
  int compared = 0;
  for (int i = 0; i < 2000; ++i) {
    const BraidWord w = testing::random_word(rng, 20);
    const BraidWord g = testing::random_word(rng, 8);
    const ReducedStandardForm a = reduce(w);
    const ReducedStandardForm b = reduce(conjugate(w, g));
    CHECK(a.base.exponent_sum() == b.base.exponent_sum());
    if (a.case_tag == ReducedCase::AllGeqTwo && b.case_tag == ReducedCase::AllGeqTwo) {
      ++compared;
      CHECK(a.base.p == b.base.p);
      CHECK(sorted(a.base.syllables) == sorted(b.base.syllables));
    }
  }
  CHECK(compared > 0);
}
