#ifndef LOCC_NUMERIC_HPP
#define LOCC_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace locc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Relative tolerance for treating two float-mode values as the same
/// coefficient when compressing a spectrum.
inline constexpr double kMergeEpsilon = 1e-12;

/// Float-mode coefficient lists must sum to 1 within this tolerance before
/// renormalization.
inline constexpr double kSumTolerance = 1e-9;

double to_double(const Rational& x);
inline double to_double(double x) { return x; }

/// Narrowing helper for multiplicities/dimensions known to be small.
inline std::size_t to_size(const BigInt& x) { return x.convert_to<std::size_t>(); }

/// "4/5" (or "3" when the denominator is 1).
std::string rational_string(const Rational& x);

/// Short decimal rendering, for display next to the exact value.
std::string decimal_string(double x);
inline std::string decimal_string(const Rational& x) {
  return decimal_string(to_double(x));
}

// Numeric-mode policy. Exact mode does all arithmetic on rationals and merges
// only identical values; float mode works on doubles and merges values equal
// up to kMergeEpsilon (relative).
template <class N> struct number_traits;

template <> struct number_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_big(const BigInt& b) { return Rational(b); }
  static Rational from_ratio(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
  }
  static Rational from_double(double d) { return Rational(d); }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static std::string str(const Rational& x) { return rational_string(x); }
};

template <> struct number_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_big(const BigInt& b) { return b.convert_to<double>(); }
  static double from_ratio(const BigInt& num, const BigInt& den) {
    return Rational(num, den).convert_to<double>();
  }
  static double from_double(double d) { return d; }
  static bool equal(double a, double b) {
    return std::abs(a - b) <= kMergeEpsilon * std::max(std::abs(a), std::abs(b));
  }
  static std::string str(double x);
};

template <class N>
concept ScalarNumber = requires { number_traits<N>::exact; };

template <ScalarNumber N> N pow_int(const N& base, unsigned e) {
  N result = number_traits<N>::one();
  N b = base;
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

BigInt pow_big(const BigInt& base, unsigned e);

/// floor(x^(1/n)) for x >= 0, n >= 1.
BigInt integer_nth_root_floor(const BigInt& x, unsigned n);

/// The exact integer n-th root of x, if one exists.
std::optional<BigInt> exact_integer_nth_root(const BigInt& x, unsigned n);

/// The exact rational n-th root of x >= 0, if one exists.
std::optional<Rational> exact_nth_root(const Rational& x, unsigned n);

BigInt binomial(unsigned n, unsigned k);

/// 0!, 1!, ..., m!.
std::vector<BigInt> factorial_table(unsigned m);

/// Parses "0.4", "2/5", "1", "4e-3" into an exact rational. Decimal literals
/// are parsed in base 10 with no float round-trip (0.4 -> 2/5).
Rational parse_exact_number(std::string_view text);

} // namespace locc

#endif // LOCC_NUMERIC_HPP
