#include "locc/numeric.hpp"

#include "locc/error.hpp"

#include <cctype>
#include <sstream>

namespace locc {

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string rational_string(const Rational& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_string(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string number_traits<double>::str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

BigInt pow_big(const BigInt& base, unsigned e) {
  return boost::multiprecision::pow(base, e);
}

BigInt integer_nth_root_floor(const BigInt& x, unsigned n) {
  if (x < 0) throw std::domain_error("integer_nth_root_floor: negative radicand");
  if (n == 0) throw std::domain_error("integer_nth_root_floor: zeroth root");
  if (n == 1 || x <= 1) return x;
  const unsigned bits = static_cast<unsigned>(msb(x)) + 1;
  BigInt r = BigInt(1) << ((bits + n - 1) / n);
  while (true) {
    // Newton step; decreases monotonically once above the root.
    BigInt next = ((n - 1) * r + x / pow_big(r, n - 1)) / n;
    if (next >= r) break;
    r = next;
  }
  while (pow_big(r, n) > x) --r;
  return r;
}

std::optional<BigInt> exact_integer_nth_root(const BigInt& x, unsigned n) {
  BigInt r = integer_nth_root_floor(x, n);
  if (pow_big(r, n) == x) return r;
  return std::nullopt;
}

std::optional<Rational> exact_nth_root(const Rational& x, unsigned n) {
  if (x < 0) return std::nullopt;
  auto num = exact_integer_nth_root(numerator(x), n);
  if (!num) return std::nullopt;
  auto den = exact_integer_nth_root(denominator(x), n);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::vector<BigInt> factorial_table(unsigned m) {
  std::vector<BigInt> fact(m + 1);
  fact[0] = 1;
  for (unsigned i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  return fact;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  raise(errc::parse_error, "not a number: '" + std::string(text) + "'");
}

// cpp_int's string constructor treats a leading '0' as an octal prefix, so
// strip leading zeros before handing a plain decimal digit run over.
BigInt digits_to_big(std::string_view digits) {
  const std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt{std::string(digits.substr(first))};
}

} // namespace

Rational parse_exact_number(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      neg = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt d = digits_to_big(den);
    if (d == 0) bad_number(text);
    Rational r{digits_to_big(num), d};
    return neg ? -r : r;
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long scale = 0; // value = digits * 10^scale
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      --scale;
    }
  }
  if (digits.empty()) bad_number(text);
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    std::string_view exp = s.substr(i);
    if (!all_digits(exp) || exp.size() > 6) bad_number(text);
    long e = std::stol(std::string(exp));
    scale += eneg ? -e : e;
    i = s.size();
  }
  if (i != s.size()) bad_number(text);

  Rational value{digits_to_big(digits)};
  if (scale > 0) value *= Rational(pow_big(10, static_cast<unsigned>(scale)));
  if (scale < 0) value /= Rational(pow_big(10, static_cast<unsigned>(-scale)));
  return neg ? -value : value;
}

const char* errc_name(errc code) {
  switch (code) {
    case errc::negative_coefficient: return "NegativeCoefficient";
    case errc::empty_spectrum: return "EmptySpectrum";
    case errc::not_normalizable: return "NotNormalizable";
    case errc::sum_out_of_tolerance: return "SumOutOfTolerance";
    case errc::copy_count_zero: return "CopyCountZero";
    case errc::copy_count_too_small: return "CopyCountTooSmall";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::nonpositive_weight: return "NonpositiveWeight";
    case errc::invalid_probability: return "InvalidProbability";
    case errc::rank_exceeds_k: return "RankExceedsK";
    case errc::rank_deficient_catalyst: return "RankDeficientCatalyst";
    case errc::unsupported_dimension: return "UnsupportedDimension";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

} // namespace locc
