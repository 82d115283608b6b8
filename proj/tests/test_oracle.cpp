// The brute-force reference path itself, plus differential agreement with
// the compressed implementation it exists to check.

#include "locc/oracle.hpp"

#include "doctest.h"

#include "locc/vidal.hpp"
#include "support/random_instances.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace {

using namespace locc;

TEST_CASE("brute_p_max on hand-checked pairs") {
  const std::vector<Rational> psi1 = {Rational(2, 5), Rational(2, 5), Rational(1, 10),
                                      Rational(1, 10)};
  const std::vector<Rational> psi2 = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  CHECK(oracle::brute_p_max(psi1, psi2) == Rational(4, 5));
  CHECK(oracle::brute_p_max(psi2, psi2) == Rational(1));
  // unequal lengths are zero-padded: a rank-2 source cannot fill rank 3
  CHECK(oracle::brute_p_max({Rational(1, 2), Rational(1, 2)}, psi2) == Rational(0));
}

TEST_CASE("brute_tensor_power enumerates every product, sorted") {
  const std::vector<Rational> x = {Rational(3, 5), Rational(2, 5)};
  const auto squared = oracle::brute_tensor_power(x, 2);
  const std::vector<Rational> expected = {Rational(9, 25), Rational(6, 25), Rational(6, 25),
                                          Rational(4, 25)};
  CHECK(squared == expected);
  CHECK(oracle::brute_tensor_power(x, 1) == x);
  CHECK(oracle::brute_tensor_power(x, 10).size() == 1024);
}

TEST_CASE("brute paths refuse sizes beyond their limits") {
  std::vector<Rational> big(oracle::kBrutePMaxLimit + 1, Rational(1));
  CHECK_THROWS_AS(oracle::brute_p_max(big, big), Error);
  const std::vector<Rational> x(100, Rational(1, 100));
  CHECK_THROWS_AS(oracle::brute_tensor_power(x, 4), Error); // 100^4 products
  CHECK_THROWS_AS(oracle::brute_tensor_power(x, 0), Error);
}

TEST_CASE("compressed and brute paths agree on random instances") {
  std::mt19937_64 rng(821);
  for (int i = 0; i < 150; ++i) {
    const auto s = locc::testing::random_spectrum(rng, 4);
    const auto t = locc::testing::random_spectrum(rng, 4);
    const int m = 1 + static_cast<int>(i % 4);

    CHECK(p_max(s, t).p_max == oracle::brute_p_max(expand(s), expand(t)));

    const auto power_s = tensor_power(s, m);
    auto compressed_then_expanded = expand(power_s);
    const auto brute = oracle::brute_tensor_power(expand(s), m);
    CHECK(compressed_then_expanded == brute);
  }
}

TEST_CASE("the paths also agree in float mode within tolerance") {
  std::mt19937_64 rng(822);
  for (int i = 0; i < 50; ++i) {
    const auto exact_s = locc::testing::random_full_rank_spectrum(rng, 4);
    const auto exact_t = locc::testing::random_full_rank_spectrum(rng, 4);
    std::vector<double> s_coeffs, t_coeffs;
    for (const auto& c : expand(exact_s)) s_coeffs.push_back(to_double(c));
    for (const auto& c : expand(exact_t)) t_coeffs.push_back(to_double(c));
    const auto s = from_coefficients<double>(s_coeffs);
    const auto t = from_coefficients<double>(t_coeffs);
    const double fast = p_max(s, t).p_max;
    const double brute = oracle::brute_p_max(expand(s), expand(t));
    CHECK(fast == doctest::Approx(brute).epsilon(1e-9));
  }
}

}  // namespace
