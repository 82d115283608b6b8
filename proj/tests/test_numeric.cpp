// Exact-scalar plumbing: parsing, roots, combinatorics.

#include "locc/numeric.hpp"

#include "doctest.h"

#include "locc/error.hpp"

#include <optional>

namespace {

using namespace locc;

TEST_CASE("parse_exact_number accepts fractions, integers and decimals") {
  CHECK(parse_exact_number("2/5") == Rational(2, 5));
  CHECK(parse_exact_number("1") == Rational(1));
  CHECK(parse_exact_number("0") == Rational(0));
  CHECK(parse_exact_number("0.5") == Rational(1, 2));
  CHECK(parse_exact_number("3.25") == Rational(13, 4));
  CHECK(parse_exact_number(".5") == Rational(1, 2));
  CHECK(parse_exact_number("5.") == Rational(5));
  CHECK(parse_exact_number(" 0.1 ") == Rational(1, 10));
}

TEST_CASE("decimal digit runs with leading zeros parse in base ten") {
  // a leading zero in the assembled digit run must not flip the radix
  CHECK(parse_exact_number("0.25") == Rational(1, 4));
  CHECK(parse_exact_number("0.40") == Rational(2, 5));
  CHECK(parse_exact_number("0.089") == Rational(89, 1000));
  CHECK(parse_exact_number("00.125") == Rational(1, 8));
  CHECK(parse_exact_number("007/010") == Rational(7, 10));
  CHECK(parse_exact_number("0.000") == Rational(0));
}

TEST_CASE("parse_exact_number rejects malformed input") {
  CHECK_THROWS_AS(parse_exact_number(""), Error);
  CHECK_THROWS_AS(parse_exact_number("abc"), Error);
  CHECK_THROWS_AS(parse_exact_number("1/0"), Error);
  CHECK_THROWS_AS(parse_exact_number("1/"), Error);
  CHECK_THROWS_AS(parse_exact_number("/2"), Error);
  CHECK_THROWS_AS(parse_exact_number("1.2.3"), Error);
  CHECK_THROWS_AS(parse_exact_number("1e"), Error);
  CHECK_THROWS_AS(parse_exact_number("2/5 junk"), Error);
}

TEST_CASE("negative values parse and are left to spectrum validation") {
  CHECK(parse_exact_number("-1/4") == Rational(-1, 4));
  CHECK(parse_exact_number("-0.5") == Rational(-1, 2));
}

TEST_CASE("scientific notation stays exact") {
  CHECK(parse_exact_number("1e5") == Rational(100000));
  CHECK(parse_exact_number("2.5e-3") == Rational(1, 400));
  CHECK(parse_exact_number("4E-1") == Rational(2, 5));
}

TEST_CASE("pow_int does repeated multiplication exactly") {
  CHECK(pow_int(Rational(2, 3), 0u) == Rational(1));
  CHECK(pow_int(Rational(2, 3), 1u) == Rational(2, 3));
  CHECK(pow_int(Rational(2, 3), 5u) == Rational(32, 243));
  CHECK(pow_int(0.5, 3u) == doctest::Approx(0.125));
}

TEST_CASE("pow_big raises to huge exponents") {
  CHECK(pow_big(BigInt(5), 20) == BigInt("95367431640625"));
  CHECK(pow_big(BigInt(7), 0) == 1);
}

TEST_CASE("integer nth roots") {
  CHECK(integer_nth_root_floor(BigInt(1000), 3) == 10);
  CHECK(integer_nth_root_floor(BigInt(999), 3) == 9);
  CHECK(exact_integer_nth_root(BigInt(1024), 10) == std::optional<BigInt>(BigInt(2)));
  CHECK(exact_integer_nth_root(BigInt(1000), 3) == std::optional<BigInt>(BigInt(10)));
  CHECK(!exact_integer_nth_root(BigInt(999), 3).has_value());
}

TEST_CASE("exact_nth_root of rationals finds perfect roots only") {
  CHECK(exact_nth_root(Rational(4, 9), 2) == std::optional<Rational>(Rational(2, 3)));
  CHECK(exact_nth_root(Rational(27, 8), 3) == std::optional<Rational>(Rational(3, 2)));
  CHECK(exact_nth_root(Rational(1), 7) == std::optional<Rational>(Rational(1)));
  CHECK(exact_nth_root(Rational(0), 4) == std::optional<Rational>(Rational(0)));
  CHECK(!exact_nth_root(Rational(24, 25), 2).has_value());
  CHECK(!exact_nth_root(Rational(2), 2).has_value());
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(24, 4) == 10626);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("factorial_table is cumulative") {
  const auto fact = factorial_table(6);
  REQUIRE(fact.size() == 7);
  CHECK(fact[0] == 1);
  CHECK(fact[6] == 720);
}

TEST_CASE("rational and decimal rendering") {
  CHECK(rational_string(Rational(4, 5)) == "4/5");
  CHECK(rational_string(Rational(3)) == "3");
  CHECK(decimal_string(Rational(1, 4)) == "0.25");
  CHECK(decimal_string(0.25) == "0.25");
}

TEST_CASE("number_traits equality matches each mode") {
  CHECK(number_traits<Rational>::exact);
  CHECK(!number_traits<double>::exact);
  CHECK(number_traits<Rational>::equal(Rational(1, 3), Rational(2, 6)));
  CHECK(!number_traits<Rational>::equal(Rational(1, 3), Rational(1, 3) + Rational(1, BigInt("1000000000000000000"))));
  CHECK(number_traits<double>::equal(0.1 + 0.2, 0.3));
  CHECK(!number_traits<double>::equal(0.3, 0.3000001));
}

}  // namespace
