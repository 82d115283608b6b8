#ifndef LOCC_SPECTRA_HPP
#define LOCC_SPECTRA_HPP

#include "locc/error.hpp"
#include "locc/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace locc {

/// Largest spectrum that expand() will materialize.
inline constexpr std::int64_t kExpandLimit = 10'000'000;

template <ScalarNumber N> struct Block {
  N value;             // > 0
  BigInt multiplicity; // >= 1

  bool operator==(const Block&) const = default;
};

/// Schmidt spectrum in compressed form: distinct positive coefficients in
/// strictly decreasing order, each with its multiplicity. Coefficients that
/// are zero are implicit; total_dimension minus the multiplicity sum is the
/// number of trailing zeros. Values are immutable once built; construct them
/// through the operations below.
template <ScalarNumber N> struct CompressedSpectrum {
  std::vector<Block<N>> blocks;
  BigInt total_dimension = 0;

  /// Number of strictly positive coefficients.
  BigInt rank() const {
    BigInt r = 0;
    for (const auto& b : blocks) r += b.multiplicity;
    return r;
  }

  /// Smallest strictly positive coefficient.
  const N& smallest_positive() const { return blocks.back().value; }

  /// Sum over blocks of value * multiplicity. 1 for a valid spectrum.
  N weighted_sum() const {
    N total = number_traits<N>::zero();
    for (const auto& b : blocks) total += b.value * number_traits<N>::from_big(b.multiplicity);
    return total;
  }

  bool operator==(const CompressedSpectrum&) const = default;
};

namespace detail {

// Sort descending and merge equal neighbours (exactly equal in exact mode,
// equal within kMergeEpsilon in float mode).
template <ScalarNumber N>
CompressedSpectrum<N> finalize_blocks(std::vector<Block<N>> blocks, BigInt dimension) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block<N>& a, const Block<N>& b) { return b.value < a.value; });
  std::vector<Block<N>> merged;
  merged.reserve(blocks.size());
  for (auto& b : blocks) {
    if (!merged.empty() && number_traits<N>::equal(merged.back().value, b.value))
      merged.back().multiplicity += b.multiplicity;
    else
      merged.push_back(std::move(b));
  }
  return {std::move(merged), std::move(dimension)};
}

} // namespace detail

/// The unit (product-state) spectrum [1].
template <ScalarNumber N> CompressedSpectrum<N> unit_spectrum() {
  return {{Block<N>{number_traits<N>::one(), 1}}, 1};
}

/// Validates, sorts, merges and normalizes a raw coefficient list. The total
/// dimension is the length of the input, so explicit zeros are kept as
/// implicit trailing zeros. Exact mode renormalizes any positive sum exactly;
/// float mode requires the input sum to be within kSumTolerance of 1 first.
template <ScalarNumber N>
CompressedSpectrum<N> from_coefficients(const std::vector<N>& raw) {
  using T = number_traits<N>;
  if (raw.empty()) raise(errc::empty_spectrum, "coefficient list is empty");
  N sum = T::zero();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < T::zero())
      raise(errc::negative_coefficient, "negative coefficient at position " +
                                            std::to_string(i + 1) + ": " + T::str(raw[i]));
    sum += raw[i];
  }
  if (sum == T::zero()) raise(errc::not_normalizable, "all coefficients are zero");
  if constexpr (!T::exact) {
    if (std::abs(sum - 1.0) > kSumTolerance)
      raise(errc::sum_out_of_tolerance,
            "coefficients sum to " + T::str(sum) + ", expected 1 within 1e-9");
  }
  std::vector<Block<N>> blocks;
  blocks.reserve(raw.size());
  for (const N& c : raw)
    if (c > T::zero()) blocks.push_back({c / sum, 1});
  return detail::finalize_blocks(std::move(blocks), BigInt(raw.size()));
}

template <ScalarNumber N>
CompressedSpectrum<N> tensor_product(const CompressedSpectrum<N>& a,
                                     const CompressedSpectrum<N>& b) {
  std::vector<Block<N>> blocks;
  blocks.reserve(a.blocks.size() * b.blocks.size());
  for (const auto& x : a.blocks)
    for (const auto& y : b.blocks)
      blocks.push_back({x.value * y.value, x.multiplicity * y.multiplicity});
  return detail::finalize_blocks(std::move(blocks), a.total_dimension * b.total_dimension);
}

/// m-fold tensor power by composition enumeration: every split
/// (k_1,...,k_d) of m over the d distinct values contributes the value
/// prod v_i^{k_i} with multiplicity multinomial(m; k_1..k_d) * prod mult_i^{k_i}.
/// Produces at most C(m+d-1, d-1) blocks instead of the n^m expanded terms.
template <ScalarNumber N>
CompressedSpectrum<N> tensor_power(const CompressedSpectrum<N>& a, int copies) {
  if (copies < 1) raise(errc::copy_count_zero, "copy count must be at least 1");
  if (copies == 1) return a;
  const unsigned m = static_cast<unsigned>(copies);
  const std::size_t d = a.blocks.size();

  std::vector<std::vector<N>> value_pow(d);
  std::vector<std::vector<BigInt>> mult_pow(d);
  for (std::size_t i = 0; i < d; ++i) {
    value_pow[i].resize(m + 1);
    mult_pow[i].resize(m + 1);
    value_pow[i][0] = number_traits<N>::one();
    mult_pow[i][0] = 1;
    for (unsigned k = 1; k <= m; ++k) {
      value_pow[i][k] = value_pow[i][k - 1] * a.blocks[i].value;
      mult_pow[i][k] = mult_pow[i][k - 1] * a.blocks[i].multiplicity;
    }
  }
  const std::vector<BigInt> fact = factorial_table(m);

  std::vector<Block<N>> blocks;
  {
    BigInt count = binomial(m + static_cast<unsigned>(d) - 1, static_cast<unsigned>(d) - 1);
    if (count <= 1'000'000) blocks.reserve(to_size(count));
  }

  // Depth-first over compositions, carrying partial products; the remaining
  // copies all land on the last block at the leaf.
  std::function<void(std::size_t, unsigned, const N&, const BigInt&, const BigInt&)> walk =
      [&](std::size_t idx, unsigned remaining, const N& value, const BigInt& mult,
          const BigInt& fact_denominator) {
        if (idx + 1 == d) {
          const unsigned k = remaining;
          blocks.push_back({value * value_pow[idx][k],
                            fact[m] / (fact_denominator * fact[k]) * mult * mult_pow[idx][k]});
          return;
        }
        for (unsigned k = 0; k <= remaining; ++k)
          walk(idx + 1, remaining - k, value * value_pow[idx][k], mult * mult_pow[idx][k],
               fact_denominator * fact[k]);
      };
  walk(0, m, number_traits<N>::one(), 1, 1);

  return detail::finalize_blocks(std::move(blocks), pow_big(a.total_dimension, m));
}

/// Direct sum of spectra scaled by positive weights, renormalized to total
/// weight 1. The result's dimension is the sum of the part dimensions.
template <ScalarNumber N>
CompressedSpectrum<N> weighted_direct_sum(
    const std::vector<std::pair<N, CompressedSpectrum<N>>>& parts) {
  using T = number_traits<N>;
  if (parts.empty()) raise(errc::empty_spectrum, "weighted direct sum of zero parts");
  N total = T::zero();
  for (const auto& [weight, part] : parts) {
    if (!(weight > T::zero()))
      raise(errc::nonpositive_weight, "part weight must be positive, got " + T::str(weight));
    total += weight * part.weighted_sum();
  }
  std::vector<Block<N>> blocks;
  BigInt dimension = 0;
  for (const auto& [weight, part] : parts) {
    const N scale = weight / total;
    for (const auto& b : part.blocks) blocks.push_back({scale * b.value, b.multiplicity});
    dimension += part.total_dimension;
  }
  return detail::finalize_blocks(std::move(blocks), std::move(dimension));
}

/// Full nonincreasing coefficient list, trailing zeros included.
template <ScalarNumber N> std::vector<N> expand(const CompressedSpectrum<N>& a) {
  if (a.total_dimension > kExpandLimit)
    raise(errc::dimension_too_large,
          "refusing to expand a spectrum of dimension " + a.total_dimension.str());
  std::vector<N> out;
  out.reserve(to_size(a.total_dimension));
  for (const auto& b : a.blocks) {
    const std::size_t count = to_size(b.multiplicity);
    out.insert(out.end(), count, b.value);
  }
  out.resize(to_size(a.total_dimension), number_traits<N>::zero());
  return out;
}

/// Structural invariant check, used by tests and debug assertions.
template <ScalarNumber N> bool is_valid(const CompressedSpectrum<N>& a) {
  using T = number_traits<N>;
  if (a.blocks.empty() || a.total_dimension < 1) return false;
  BigInt mults = 0;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    if (!(a.blocks[i].value > T::zero()) || a.blocks[i].multiplicity < 1) return false;
    if (i > 0 && !(a.blocks[i].value < a.blocks[i - 1].value)) return false;
    mults += a.blocks[i].multiplicity;
  }
  if (mults > a.total_dimension) return false;
  const N sum = a.weighted_sum();
  if constexpr (T::exact)
    return sum == T::one();
  else
    return std::abs(sum - 1.0) <= kSumTolerance;
}

} // namespace locc

#endif // LOCC_SPECTRA_HPP
