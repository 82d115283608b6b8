#ifndef LOCC_VIDAL_HPP
#define LOCC_VIDAL_HPP

#include "locc/spectra.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace locc {

/// Result of an optimal-conversion-probability computation, including the
/// position where the minimizing suffix ratio is attained.
template <ScalarNumber N> struct ConversionReport {
  N p_max;               // min over l of E_l(source)/E_l(target), in [0, 1]
  BigInt argmin_position; // smallest 1-based expanded index attaining the min
  N source_tail;          // E_{l*}(source)
  N target_tail;          // E_{l*}(target)

  bool operator==(const ConversionReport&) const = default;
};

namespace detail {

// Suffix sums E_l = sum_{i >= l} of the expanded coefficients, evaluated
// lazily from the compressed blocks: the table stores the tail at the start
// of every block, and the tail at any position inside a block follows
// linearly. Positions are 1-based expanded indices and may far exceed any
// machine integer, hence BigInt throughout.
template <ScalarNumber N> class TailTable {
public:
  explicit TailTable(const CompressedSpectrum<N>& a) {
    const std::size_t d = a.blocks.size();
    starts_.reserve(d);
    values_.reserve(d);
    tails_.resize(d);
    BigInt start = 1;
    for (const auto& b : a.blocks) {
      starts_.push_back(start);
      values_.push_back(b.value);
      start += b.multiplicity;
    }
    rank_plus_one_ = start;
    N acc = number_traits<N>::zero();
    for (std::size_t i = d; i-- > 0;) {
      acc += a.blocks[i].value * number_traits<N>::from_big(a.blocks[i].multiplicity);
      tails_[i] = acc;
    }
  }

  /// E_l for any l >= 1; zero once l passes the last positive coefficient.
  N tail_at(const BigInt& l) const {
    if (l >= rank_plus_one_) return number_traits<N>::zero();
    const auto it = std::upper_bound(starts_.begin(), starts_.end(), l);
    const std::size_t i = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return tails_[i] - values_[i] * number_traits<N>::from_big(l - starts_[i]);
  }

  /// One past the last strictly positive coefficient (= rank + 1).
  const BigInt& rank_plus_one() const { return rank_plus_one_; }

private:
  std::vector<BigInt> starts_; // expanded index where each block begins
  std::vector<N> values_;
  std::vector<N> tails_; // E_l at each block start
  BigInt rank_plus_one_ = 1;
};

// The expanded positions that can host the extremum of any quantity that is a
// ratio (or difference) of the two tail functions: within a maximal run where
// both spectra hold constant values the tails are linear in l, so such
// quantities are monotone there and it suffices to look at run boundaries.
// Block starts, block ends, the starts of the trailing-zero regions and the
// common dimension together cover every boundary. Only positions up to `cap`
// are kept.
template <ScalarNumber N>
std::vector<BigInt> segment_endpoints(const CompressedSpectrum<N>& a,
                                      const CompressedSpectrum<N>& b, const BigInt& cap) {
  std::vector<BigInt> out;
  out.reserve(4 * (a.blocks.size() + b.blocks.size()) + 4);
  const auto add = [&](BigInt l) {
    if (l >= 1 && l <= cap) out.push_back(std::move(l));
  };
  for (const auto* spectrum : {&a, &b}) {
    BigInt start = 1;
    for (const auto& block : spectrum->blocks) {
      add(start);
      add(start + block.multiplicity - 1);
      start += block.multiplicity;
    }
    add(start); // first position of the trailing-zero region, if any
  }
  add(cap);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace detail

/// The tail sums E_l of one spectrum at the start and end of every block,
/// as (position, tail) pairs in increasing position order.
template <ScalarNumber N>
std::vector<std::pair<BigInt, N>> suffix_sums(const CompressedSpectrum<N>& a) {
  detail::TailTable<N> table(a);
  std::vector<std::pair<BigInt, N>> out;
  out.reserve(2 * a.blocks.size());
  BigInt start = 1;
  for (const auto& block : a.blocks) {
    const BigInt end = start + block.multiplicity - 1;
    out.emplace_back(start, table.tail_at(start));
    if (end != start) out.emplace_back(end, table.tail_at(end));
    start = end + 1;
  }
  return out;
}

/// Optimal conversion probability between two Schmidt spectra, by Vidal's
/// formula: min over l of E_l(source)/E_l(target), where positions whose
/// target tail vanishes are non-binding. A source of lower Schmidt rank than
/// the target cannot reach it at all (rank never increases under LOCC), which
/// surfaces here as a zero numerator against a positive denominator.
///
/// Runs in O(blocks log blocks): the minimum over each constant-value run is
/// attained at a run boundary, so only segment endpoints are evaluated.
template <ScalarNumber N>
ConversionReport<N> p_max(const CompressedSpectrum<N>& source,
                          const CompressedSpectrum<N>& target) {
  using T = number_traits<N>;
  const BigInt rank_s = source.rank();
  const BigInt rank_t = target.rank();
  detail::TailTable<N> target_tails(target);

  if (rank_s < rank_t) {
    const BigInt l = rank_s + 1;
    return {T::zero(), l, T::zero(), target_tails.tail_at(l)};
  }

  detail::TailTable<N> source_tails(source);
  // Positions beyond rank(target) have zero target tail and are skipped.
  const std::vector<BigInt> candidates = detail::segment_endpoints(source, target, rank_t);

  ConversionReport<N> best{T::zero(), 0, T::zero(), T::zero()};
  bool have = false;
  for (const BigInt& l : candidates) {
    const N target_tail = target_tails.tail_at(l);
    if (!(target_tail > T::zero())) continue;
    const N source_tail = source_tails.tail_at(l);
    const N ratio = source_tail / target_tail;
    if (!have || ratio < best.p_max) {
      best = {ratio, l, source_tail, target_tail};
      have = true;
    }
  }
  // l = 1 is always a candidate with tails summing the full spectra, so in
  // exact mode the minimum is at most 1; float rounding can poke above.
  if constexpr (!T::exact) {
    if (best.p_max > 1.0) best.p_max = 1.0;
  }
  return best;
}

/// Whether the conversion succeeds with certainty, decided by Nielsen's
/// criterion: the source is majorized by the target, i.e. every source tail
/// dominates the matching target tail. This deliberately re-derives the
/// answer from the majorization order rather than comparing p_max against 1,
/// so the two characterizations check each other in the test suite.
template <ScalarNumber N>
bool is_deterministic(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target) {
  using T = number_traits<N>;
  if (source.rank() < target.rank()) return false;
  detail::TailTable<N> source_tails(source);
  detail::TailTable<N> target_tails(target);
  // Tails agree at l = 1 and both vanish past max(rank); the difference is
  // linear on each constant-value run, so endpoint checks are exhaustive.
  const std::vector<BigInt> candidates =
      detail::segment_endpoints(source, target, target.rank());
  for (const BigInt& l : candidates) {
    const N s = source_tails.tail_at(l);
    const N t = target_tails.tail_at(l);
    if (s < t && !T::equal(s, t)) return false;
  }
  return true;
}

/// The closed-form value of the entanglement-assisted and multiple-copy
/// suprema: min{1, alpha_n/beta_n} over the smallest coefficients at the
/// common dimension. Trailing zeros shared by both spectra cancel from the
/// ratio, so after stripping them the comparison reduces to the ranks: a
/// strictly larger source rank leaves beta_n = 0 (supremum 1), a strictly
/// smaller one leaves alpha_n = 0 (supremum 0), and equal ranks compare the
/// smallest positive coefficients directly.
template <ScalarNumber N>
N closed_form_pe(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target) {
  using T = number_traits<N>;
  const BigInt rank_s = source.rank();
  const BigInt rank_t = target.rank();
  if (rank_s > rank_t) return T::one();
  if (rank_s < rank_t) return T::zero();
  const N ratio = source.smallest_positive() / target.smallest_positive();
  return ratio < T::one() ? ratio : T::one();
}

} // namespace locc

#endif // LOCC_VIDAL_HPP
