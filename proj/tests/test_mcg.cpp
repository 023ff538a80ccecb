#include <doctest.h>

#include "qpbraid/garside.hpp"
#include "qpbraid/mcg.hpp"
#include "random_words.hpp"

using namespace qpbraid;

namespace {

TwistWord random_twist(std::mt19937_64& rng, int max_len, bool positive) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> curve(0, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  TwistWord t;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    t.append(static_cast<Curve>(curve(rng)), positive || sign(rng) ? 1 : -1);
  }
  return t;
}

}  // namespace

TEST_CASE("twist parsing and rendering") {
  const TwistWord t = parse_twist("d a^5 b^-15");
  REQUIRE(t.runs().size() == 3);
  CHECK(t.runs()[0] == TwistRun{Curve::DeltaBoundary, 1});
  CHECK(t.runs()[2] == TwistRun{Curve::Beta, -15});
  CHECK(render(t) == "d a^5 b^-15");
  CHECK(parse_twist(render(t)) == t);
  CHECK(parse_twist("a a^-1").empty());
  CHECK_THROWS(parse_twist("s1"));
}

TEST_CASE("psi_inverse examples") {
  for (int k : {0, 1, 7}) {
    const BraidWord expected = parse_braid("(s1 s2)^6 s1^5 s2^-" + std::to_string(15 + k));
    CHECK(psi_inverse(make_phi(k)) == expected);
    CHECK(equals(psi_inverse(make_phi(k)), make_beta(k)));
  }
  CHECK(psi_inverse(parse_twist("a")) == parse_braid("s1"));
  CHECK(equals(psi_inverse(parse_twist("d")), parse_braid("D^4")));
  CHECK(equals(psi_inverse(parse_twist("d^-1")), parse_braid("D^-4")));
}

TEST_CASE("psi examples") {
  CHECK(psi(parse_braid("s1^5 s2^-15")) == parse_twist("a^5 b^-15"));
  CHECK(psi(parse_braid("D")) == parse_twist("a b a"));
  CHECK(equals(psi_inverse(psi(make_beta(0))), psi_inverse(parse_twist("d a^5 b^-15"))));
}

TEST_CASE("family words") {
  CHECK(make_phi(0) == parse_twist("d a^5 b^-15"));
  CHECK(make_phi(1) == parse_twist("d a^5 b^-16"));
  CHECK_THROWS_AS(make_phi(-1), std::invalid_argument);
  CHECK(exponent_sum(make_beta(Integer("1000000000000"))) == Integer("-999999999998"));
}

TEST_CASE("classification examples") {
  for (int k = 0; k <= 50; ++k) {
    const auto mv = classify_monodromy(make_phi(k));
    CHECK(mv.verdict.outcome == Outcome::NotQP);
    CHECK(mv.braid_image == psi_inverse(make_phi(k)));
    CHECK(mv.verdict.exponent_sum == 2 - k);
  }
  CHECK(classify_monodromy(parse_twist("a b")).verdict.outcome == Outcome::QP);
  const auto d = classify_monodromy(parse_twist("d"));
  CHECK(d.verdict.outcome == Outcome::QP);
  CHECK(d.verdict.bands.size() == 12);
  CHECK(verify_bands(d.verdict.bands, d.braid_image));
}

TEST_CASE("property: round trips and homomorphism") {
  std::mt19937_64 rng(0x5eed0201);
  for (int i = 0; i < 2000; ++i) {
    const BraidWord w = testing::random_word(rng, 20);
    CHECK(equals(psi_inverse(psi(w)), w));
    const TwistWord t1 = random_twist(rng, 8, false);
    const TwistWord t2 = random_twist(rng, 8, false);
    CHECK(equals(psi_inverse(psi(psi_inverse(t1))), psi_inverse(t1)));
    CHECK(psi_inverse(multiply(t1, t2)) == multiply(psi_inverse(t1), psi_inverse(t2)));
  }
}

TEST_CASE("property: positive twist words are positive") {
  std::mt19937_64 rng(0x5eed0202);
  for (int i = 0; i < 300; ++i) {
    const TwistWord t = random_twist(rng, 8, true);
    const auto mv = classify_monodromy(t);
    CHECK(mv.verdict.outcome == Outcome::QP);
    CHECK(verify_bands(mv.verdict.bands, mv.braid_image));
  }
}
