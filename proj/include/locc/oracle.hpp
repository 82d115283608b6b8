#ifndef LOCC_ORACLE_HPP
#define LOCC_ORACLE_HPP

#include "locc/error.hpp"
#include "locc/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

// Brute-force reference implementations over fully expanded coefficient
// lists. These deliberately share no logic with the compressed-block paths:
// plain suffix-sum arrays here, block segmentation there.

namespace locc::oracle {

inline constexpr std::size_t kBrutePMaxLimit = 10'000;
inline constexpr std::size_t kBrutePowerLimit = 1'000'000;

/// min over l of E_l(source)/E_l(target) on zero-padded expanded spectra,
/// skipping positions where the target tail is zero.
template <ScalarNumber N>
N brute_p_max(std::vector<N> source, std::vector<N> target) {
  using T = number_traits<N>;
  const std::size_t n = std::max(source.size(), target.size());
  if (n > kBrutePMaxLimit)
    raise(errc::dimension_too_large,
          "brute_p_max limited to dimension " + std::to_string(kBrutePMaxLimit));
  source.resize(n, T::zero());
  target.resize(n, T::zero());

  std::vector<N> tail_source(n + 2, T::zero());
  std::vector<N> tail_target(n + 2, T::zero());
  for (std::size_t l = n; l >= 1; --l) {
    tail_source[l] = tail_source[l + 1] + source[l - 1];
    tail_target[l] = tail_target[l + 1] + target[l - 1];
  }

  bool have = false;
  N best = T::zero();
  for (std::size_t l = 1; l <= n; ++l) {
    if (tail_target[l] == T::zero()) continue;
    const N ratio = tail_source[l] / tail_target[l];
    if (!have || ratio < best) {
      best = ratio;
      have = true;
    }
  }
  return best;
}

/// All n^m coefficient products, sorted into nonincreasing order.
template <ScalarNumber N>
std::vector<N> brute_tensor_power(const std::vector<N>& x, int copies) {
  if (copies < 1) raise(errc::copy_count_zero, "copy count must be at least 1");
  BigInt total = pow_big(BigInt(x.size()), static_cast<unsigned>(copies));
  if (total > kBrutePowerLimit)
    raise(errc::dimension_too_large,
          "brute_tensor_power limited to " + std::to_string(kBrutePowerLimit) + " products");
  std::vector<N> result{number_traits<N>::one()};
  for (int round = 0; round < copies; ++round) {
    std::vector<N> next;
    next.reserve(result.size() * x.size());
    for (const N& r : result)
      for (const N& c : x) next.push_back(r * c);
    result = std::move(next);
  }
  std::sort(result.begin(), result.end(), std::greater<N>());
  return result;
}

} // namespace locc::oracle

#endif // LOCC_ORACLE_HPP
