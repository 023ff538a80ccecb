#include <doctest.h>

#include "qpbraid/errors.hpp"
#include "qpbraid/garside.hpp"
#include "qpbraid/word.hpp"
#include "random_words.hpp"

using namespace qpbraid;

TEST_CASE("parse simple words") {
  const BraidWord w = parse_braid("s1 s2^-3 D^2");
  REQUIRE(w.size() == 3);
  CHECK(w.runs()[0] == Run{Generator::Sigma1, 1});
  CHECK(w.runs()[1] == Run{Generator::Sigma2, -3});
  CHECK(w.runs()[2] == Run{Generator::Delta, 2});
  CHECK(render(w) == "s1 s2^-3 D^2");
}

TEST_CASE("empty input is the identity") {
  CHECK(parse_braid("").empty());
  CHECK(parse_braid("   ").empty());
  CHECK(render(BraidWord{}) == "1");
}

TEST_CASE("adjacent runs merge and cancel") {
  CHECK(parse_braid("s1 s1^-1").empty());
  CHECK(render(parse_braid("s1^2 s1^3 s2")) == "s1^5 s2");
  CHECK(parse_braid("s1 s2 s2^-1 s1^-1").empty());
  CHECK(render(parse_braid("D D^-1 s2")) == "s2");
}

TEST_CASE("groups and powers") {
  CHECK(parse_braid("(s1 s2)^3") == parse_braid("s1 s2 s1 s2 s1 s2"));
  CHECK(parse_braid("(s1 s2)^-1") == parse_braid("s2^-1 s1^-1"));
  CHECK(parse_braid("(s1^2)^3") == parse_braid("s1^6"));
  CHECK(parse_braid("((s1 s2)^2 D)^2") == parse_braid("s1 s2 s1 s2 D s1 s2 s1 s2 D"));
}

TEST_CASE("separators") {
  CHECK(parse_braid("s1*s2") == parse_braid("s1 s2"));
  CHECK(parse_braid("s1·s2") == parse_braid("s1 s2"));
}

TEST_CASE("parse errors carry an offset") {
  CHECK_THROWS_AS(parse_braid("s1^0"), ParseError);
  CHECK_THROWS_AS(parse_braid("s3"), ParseError);
  CHECK_THROWS_AS(parse_braid("(s1 s2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^"), ParseError);
  try {
    parse_braid("s1 s2 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  try {
    parse_braid("s1^0");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == "zero exponent at byte 3");
  }
}

TEST_CASE("render compresses periodic blocks") {
  const BraidWord w = parse_braid("D^-11 s1^7 (s2^2 s1^2)^7");
  CHECK(render(w) == "D^-11 s1^7 (s2^2 s1^2)^7");
  CHECK(parse_braid(render(w)) == w);
}

TEST_CASE("huge exponents stay exact") {
  const BraidWord w = parse_braid("s1^123456789012345678901234567890 s2^-5");
  CHECK(render(w) == "s1^123456789012345678901234567890 s2^-5");
  CHECK(exponent_sum(w) == Integer("123456789012345678901234567885"));
  CHECK_THROWS_AS(expand_delta(parse_braid("D^100000000000")), ResourceLimitError);
}

TEST_CASE("invert, multiply, conjugate, power") {
  const BraidWord u = parse_braid("s1 s2^-2 D");
  CHECK(multiply(u, invert(u)).empty());
  CHECK(conjugate(u, BraidWord{}) == u);
  const BraidWord g = parse_braid("s2");
  CHECK(conjugate(u, g) == parse_braid("s2^-1 s1 s2^-2 D s2"));
  CHECK(power(u, 0).empty());
  CHECK(power(u, 2) == multiply(u, u));
  CHECK(power(u, -1) == invert(u));
}

TEST_CASE("expand_delta") {
  CHECK(expand_delta(parse_braid("D")) == parse_braid("s1 s2 s1"));
  CHECK(expand_delta(parse_braid("D^-1")) == parse_braid("s1^-1 s2^-1 s1^-1"));
  CHECK_FALSE(expand_delta(parse_braid("D^2 s2")).contains_delta());
}

TEST_CASE("exponent sum examples") {
  CHECK(exponent_sum(parse_braid("(s1 s2)^6 s1^5 s2^-15")) == 2);
  CHECK(exponent_sum(parse_braid("D^-11 s1^7 (s2^2 s1^2)^7")) == 2);
  CHECK(exponent_sum(parse_braid("D")) == 3);
}

TEST_CASE("property: render/parse round trip and exponent-sum laws") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 2000; ++i) {
    const BraidWord u = testing::random_word(rng, 30);
    const BraidWord v = testing::random_word(rng, 30);
    const BraidWord g = testing::random_word(rng, 10);
    CHECK(parse_braid(render(u)) == u);
    CHECK(exponent_sum(multiply(u, v)) == exponent_sum(u) + exponent_sum(v));
    CHECK(exponent_sum(conjugate(u, g)) == exponent_sum(u));
    CHECK(exponent_sum(expand_delta(u)) == exponent_sum(u));
  }
}
