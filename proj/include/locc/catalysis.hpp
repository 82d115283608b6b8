#ifndef LOCC_CATALYSIS_HPP
#define LOCC_CATALYSIS_HPP

#include "locc/multicopy.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace locc {

/// Outcome of the three-step multiple-copy protocol built on a catalyst:
/// borrow a maximally entangled state, run the catalyzed conversion on every
/// copy, then restore the borrowed state. The product of the three stage
/// probabilities lower-bounds the direct m-copy optimum.
template <ScalarNumber N> struct ProtocolReport {
  N p1;              // borrowing stage; always 1
  N p2_lower_bound;  // catalyzed conversion of all m copies: pCatalyzed^m
  N p3;              // restoring stage: k * gamma_k
  N product_bound;   // p1 * p2_lower_bound * p3
  N m_copy_p_max;    // direct pMax(source^⊗m → target^⊗m)
  BigInt k;          // catalyst dimension
  N gamma_k;         // smallest catalyst coefficient

  bool operator==(const ProtocolReport&) const = default;
};

/// A catalyst assembled from the m-copy conversion: the weighted direct sum
/// over j of source^⊗(m-1-j) ⊗ target^⊗j with weights p_m^j. The j-th weight
/// needs the m-th root of the m-copy probability; when that root is not
/// rational the weights fall back to floating roots and weights_exact records
/// the downgrade.
template <ScalarNumber N> struct CatalystConstruction {
  CompressedSpectrum<N> catalyst;
  N p_m_radicand;     // pMax of the m-copy instance the weights derive from
  double p_m = 0.0;   // radicand^(1/m), presentation value
  int copies = 0;     // m
  bool weights_exact = false;

  bool operator==(const CatalystConstruction&) const = default;
};

/// Best catalyst found on a finite grid, with the catalyst-free probability
/// for comparison.
template <ScalarNumber N> struct CatalystSearchResult {
  CompressedSpectrum<N> best_catalyst;
  N best_p;
  N baseline; // pMax without any catalyst
  int grid_resolution = 0;

  bool operator==(const CatalystSearchResult&) const = default;
};

/// Conversion probability with a catalyst attached to both sides. The
/// catalyst is returned intact by definition of the quantity; no separate
/// bookkeeping is needed.
template <ScalarNumber N>
N p_catalyzed(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target,
              const CompressedSpectrum<N>& catalyst) {
  return p_max(tensor_product(source, catalyst), tensor_product(target, catalyst)).p_max;
}

/// The flat spectrum (1/k, ..., 1/k) of the k-dimensional maximally
/// entangled state.
template <ScalarNumber N> CompressedSpectrum<N> maximally_entangled(const BigInt& k) {
  if (k < 1) raise(errc::empty_spectrum, "maximally entangled state needs dimension >= 1");
  return {{Block<N>{number_traits<N>::from_ratio(1, k), k}}, k};
}

/// Probability of preparing `target` from the k-dimensional maximally
/// entangled state: exactly 1 whenever the target fits, because the flat
/// spectrum is majorized by every spectrum of rank at most k. The general
/// formula is evaluated as well and must agree, as a self-test.
template <ScalarNumber N>
N p_max_from_max_entangled(const BigInt& k, const CompressedSpectrum<N>& target) {
  using T = number_traits<N>;
  if (target.rank() > k)
    raise(errc::rank_exceeds_k, "target of rank " + target.rank().str() +
                                    " cannot be prepared from a maximally entangled state of "
                                    "dimension " +
                                    k.str());
  const N general = p_max(maximally_entangled<N>(k), target).p_max;
  if (!T::equal(general, T::one()))
    throw std::logic_error("flat-source conversion probability must be 1, got " +
                           T::str(general));
  return T::one();
}

/// Probability of distilling the k-dimensional maximally entangled state from
/// a full-rank catalyst of dimension k: the closed form k * gamma_k, with
/// gamma_k the catalyst's smallest coefficient. The general formula is
/// evaluated as well and must agree, as a self-test.
template <ScalarNumber N>
N p_max_to_max_entangled(const CompressedSpectrum<N>& catalyst, const BigInt& k) {
  using T = number_traits<N>;
  if (catalyst.total_dimension != k || catalyst.rank() < k)
    raise(errc::rank_deficient_catalyst,
          "catalyst must have full rank " + k.str() + ", got rank " + catalyst.rank().str() +
              " on dimension " + catalyst.total_dimension.str());
  const N closed_form = T::from_big(k) * catalyst.smallest_positive();
  const N general = p_max(catalyst, maximally_entangled<N>(k)).p_max;
  if (!T::equal(general, closed_form))
    throw std::logic_error("distillation probability " + T::str(general) +
                           " disagrees with closed form " + T::str(closed_form));
  return closed_form;
}

namespace detail {

template <ScalarNumber N> CompressedSpectrum<N> power_or_unit(const CompressedSpectrum<N>& x,
                                                              int copies) {
  return copies == 0 ? unit_spectrum<N>() : tensor_power(x, copies);
}

} // namespace detail

/// Builds the catalyst that transfers the m-copy conversion probability down
/// to a single catalyzed copy: the direct sum over j = 0..m-1 of
/// source^⊗(m-1-j) ⊗ target^⊗j weighted by p_m^j, normalized. The catalyzed
/// probability with this state is at least p_m; the test suite verifies the
/// guarantee rather than assuming it.
template <ScalarNumber N>
CatalystConstruction<N> construct_catalyst(const CompressedSpectrum<N>& source,
                                           const CompressedSpectrum<N>& target, int copies) {
  using T = number_traits<N>;
  if (copies < 2)
    raise(errc::copy_count_too_small, "catalyst construction needs at least 2 copies");
  const N radicand = p_multicopy_radicand(source, target, copies);

  N root;
  bool weights_exact;
  if constexpr (T::exact) {
    if (const auto exact_root = exact_nth_root(radicand, static_cast<unsigned>(copies))) {
      root = *exact_root;
      weights_exact = true;
    } else {
      root = T::from_double(std::pow(to_double(radicand), 1.0 / copies));
      weights_exact = false;
    }
  } else {
    root = T::from_double(std::pow(to_double(radicand), 1.0 / copies));
    weights_exact = false;
  }

  std::vector<std::pair<N, CompressedSpectrum<N>>> parts;
  parts.reserve(static_cast<std::size_t>(copies));
  for (int j = 0; j < copies; ++j) {
    const N weight = pow_int(root, static_cast<unsigned>(j));
    if (!(weight > T::zero())) continue; // a zero root contributes only j = 0
    parts.emplace_back(weight, tensor_product(detail::power_or_unit(source, copies - 1 - j),
                                              detail::power_or_unit(target, j)));
  }
  return {weighted_direct_sum(parts), radicand, to_double(root), copies, weights_exact};
}

/// Runs the three-step protocol bookkeeping for the given catalyst and copy
/// count and cross-validates the two structural facts it rests on: the
/// product of the stage probabilities never exceeds the direct m-copy
/// optimum, and attaching a maximally entangled state to both sides leaves
/// that optimum unchanged. Violations of either are internal errors, not
/// input errors.
template <ScalarNumber N>
ProtocolReport<N> simulate_protocol(const CompressedSpectrum<N>& source,
                                    const CompressedSpectrum<N>& target,
                                    const CompressedSpectrum<N>& catalyst, int copies) {
  using T = number_traits<N>;
  const BigInt k = catalyst.total_dimension;
  if (catalyst.rank() < k)
    raise(errc::rank_deficient_catalyst,
          "protocol needs a full-rank catalyst; got rank " + catalyst.rank().str() +
              " on dimension " + k.str());

  const N gamma_k = catalyst.smallest_positive();
  const N catalyzed = p_catalyzed(source, target, catalyst);
  ProtocolReport<N> report;
  report.p1 = T::one();
  report.p2_lower_bound = pow_int(catalyzed, static_cast<unsigned>(copies));
  report.p3 = T::from_big(k) * gamma_k;
  report.product_bound = report.p1 * report.p2_lower_bound * report.p3;
  report.k = k;
  report.gamma_k = gamma_k;

  const CompressedSpectrum<N> source_m = tensor_power(source, copies);
  const CompressedSpectrum<N> target_m = tensor_power(target, copies);
  report.m_copy_p_max = p_max(source_m, target_m).p_max;

  const bool bound_holds =
      T::exact ? report.m_copy_p_max >= report.product_bound
               : to_double(report.m_copy_p_max) >= to_double(report.product_bound) - kSumTolerance;
  if (!bound_holds)
    throw std::logic_error("protocol bound " + T::str(report.product_bound) +
                           " exceeds the m-copy optimum " + T::str(report.m_copy_p_max));

  const CompressedSpectrum<N> flat = maximally_entangled<N>(k);
  const N attached = p_max(tensor_product(source_m, flat), tensor_product(target_m, flat)).p_max;
  if (!T::equal(attached, report.m_copy_p_max))
    throw std::logic_error("maximally entangled state altered the conversion probability: " +
                           T::str(attached) + " vs " + T::str(report.m_copy_p_max));
  return report;
}

/// Exhaustive search over a finite catalyst grid of dimension k. For k = 2
/// the grid is gamma = 1/2 + i/(2R) for i = 0..R-1 (catalyst [gamma,
/// 1-gamma]); for k = 3 and 4 it is the nonincreasing integer points of the
/// probability simplex at resolution R. Grid points are visited in
/// lexicographically increasing coefficient order and replaced only on strict
/// improvement, so ties resolve to the lexicographically smallest catalyst.
template <ScalarNumber N>
CatalystSearchResult<N> search_catalyst(const CompressedSpectrum<N>& source,
                                        const CompressedSpectrum<N>& target, int k,
                                        int grid_resolution) {
  using T = number_traits<N>;
  if (k < 2 || k > 4)
    raise(errc::unsupported_dimension,
          "catalyst search supports dimensions 2 to 4, got " + std::to_string(k));
  if (grid_resolution < 2)
    throw std::invalid_argument("grid resolution must be at least 2, got " +
                                std::to_string(grid_resolution));
  const unsigned resolution = static_cast<unsigned>(grid_resolution);

  CatalystSearchResult<N> result;
  result.baseline = p_max(source, target).p_max;
  result.grid_resolution = grid_resolution;

  bool have = false;
  const auto visit = [&](const std::vector<N>& coefficients) {
    const CompressedSpectrum<N> candidate = from_coefficients(coefficients);
    const N p = p_catalyzed(source, target, candidate);
    if (!have || p > result.best_p) {
      result.best_catalyst = candidate;
      result.best_p = p;
      have = true;
    }
  };

  if (k == 2) {
    for (unsigned i = 0; i < resolution; ++i) {
      const N gamma = T::from_ratio(resolution + i, 2 * resolution);
      visit({gamma, T::one() - gamma});
    }
  } else {
    std::vector<unsigned> parts(static_cast<std::size_t>(k));
    std::function<void(std::size_t, unsigned, unsigned)> enumerate =
        [&](std::size_t index, unsigned cap, unsigned remaining) {
          const std::size_t slots = parts.size() - index;
          if (slots == 1) {
            if (remaining <= cap) {
              parts[index] = remaining;
              std::vector<N> coefficients;
              coefficients.reserve(parts.size());
              for (unsigned a : parts) coefficients.push_back(T::from_ratio(a, resolution));
              visit(coefficients);
            }
            return;
          }
          const unsigned lowest =
              (remaining + static_cast<unsigned>(slots) - 1) / static_cast<unsigned>(slots);
          const unsigned highest = std::min<unsigned>(cap, remaining);
          for (unsigned v = lowest; v <= highest; ++v) {
            parts[index] = v;
            enumerate(index + 1, v, remaining - v);
          }
        };
    enumerate(0, resolution, resolution);
  }
  return result;
}

} // namespace locc

#endif // LOCC_CATALYSIS_HPP
