#ifndef LOCC_MULTICOPY_HPP
#define LOCC_MULTICOPY_HPP

#include "locc/vidal.hpp"

#include <cstddef>
#include <vector>

namespace locc {

/// One row of a copy-count sweep: the m-copy conversion probability (the
/// radicand of the per-copy geometric mean) plus the compressed block counts
/// that certify the computation stayed polynomial.
template <ScalarNumber N> struct TraceEntry {
  int copies = 0;
  N radicand;  // pMax(source^⊗m → target^⊗m)
  N p_avg;     // radicand^(1/m); exact whenever the root is rational
  std::size_t blocks_source = 0;
  std::size_t blocks_target = 0;

  bool operator==(const TraceEntry&) const = default;
};

/// Sweep summary: the per-copy averages seen, the best of them (a certified
/// lower bound on the multiple-copy supremum) and the closed-form value that
/// bounds them all from above.
template <ScalarNumber N> struct MulticopyTrace {
  std::vector<TraceEntry<N>> entries;
  int best_m = 0;
  N best_radicand = number_traits<N>::zero();
  N best_p_avg = number_traits<N>::zero();
  N closed_form_bound = number_traits<N>::zero();

  bool operator==(const MulticopyTrace&) const = default;
};

/// radicand^(1/m) carried back into the scalar type: the exact rational root
/// when one exists (always for m = 1), otherwise the floating root. Decisions
/// must not be made on this value — compare radicands against m-th powers.
template <ScalarNumber N> N nth_root_scalar(const N& radicand, int m) {
  using T = number_traits<N>;
  if (m == 1) return radicand;
  if constexpr (T::exact) {
    if (const auto root = exact_nth_root(radicand, static_cast<unsigned>(m))) return *root;
  }
  return T::from_double(std::pow(to_double(radicand), 1.0 / m));
}

/// Exact comparison of radicand_a^(1/m_a) > radicand_b^(1/m_b) via cross
/// powers; raising both sides to m_a * m_b preserves the order on [0, inf).
template <ScalarNumber N>
bool root_greater(const N& radicand_a, int m_a, const N& radicand_b, int m_b) {
  return pow_int(radicand_a, static_cast<unsigned>(m_b)) >
         pow_int(radicand_b, static_cast<unsigned>(m_a));
}

/// Full conversion report for the m-copy instance. The report's p_max is the
/// quantity whose m-th root is the per-copy geometric mean; callers that need
/// exact thresholds compare on it directly.
template <ScalarNumber N>
ConversionReport<N> multicopy_conversion(const CompressedSpectrum<N>& source,
                                         const CompressedSpectrum<N>& target, int copies) {
  return p_max(tensor_power(source, copies), tensor_power(target, copies));
}

template <ScalarNumber N>
N p_multicopy_radicand(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target,
                       int copies) {
  return multicopy_conversion(source, target, copies).p_max;
}

/// Per-copy geometric mean of the optimal m-copy conversion probability.
template <ScalarNumber N>
N p_multicopy_avg(const CompressedSpectrum<N>& source, const CompressedSpectrum<N>& target,
                  int copies) {
  return nth_root_scalar(p_multicopy_radicand(source, target, copies), copies);
}

/// Sweeps m = 1..m_max recording the per-copy average for each m, the running
/// best (a lower bound on the multiple-copy supremum) and the closed-form
/// upper bound. Stops as soon as the average is within early_stop_gap of the
/// bound — with the default gap of zero that means only once the bound is
/// attained exactly, after which larger m cannot improve on it. The stop rule
/// is evaluated on radicands against m-th powers, so exact mode never decides
/// through a floating root.
template <ScalarNumber N>
MulticopyTrace<N> estimate_pm(const CompressedSpectrum<N>& source,
                              const CompressedSpectrum<N>& target, int m_max,
                              const N& early_stop_gap = number_traits<N>::zero()) {
  using T = number_traits<N>;
  if (m_max < 1) raise(errc::copy_count_zero, "copy-count sweep needs m_max >= 1");
  MulticopyTrace<N> trace;
  trace.closed_form_bound = closed_form_pe(source, target);
  const N stop_at = trace.closed_form_bound - early_stop_gap;
  for (int m = 1; m <= m_max; ++m) {
    const CompressedSpectrum<N> source_m = tensor_power(source, m);
    const CompressedSpectrum<N> target_m = tensor_power(target, m);
    const ConversionReport<N> report = p_max(source_m, target_m);
    TraceEntry<N> entry{m, report.p_max, nth_root_scalar(report.p_max, m),
                        source_m.blocks.size(), target_m.blocks.size()};
    trace.entries.push_back(entry);
    if (trace.best_m == 0 || root_greater(entry.radicand, m, trace.best_radicand, trace.best_m)) {
      trace.best_m = m;
      trace.best_radicand = entry.radicand;
      trace.best_p_avg = entry.p_avg;
    }
    const bool reached = !(stop_at > T::zero()) ||
                         entry.radicand >= pow_int(stop_at, static_cast<unsigned>(m));
    if (reached) break;
  }
  return trace;
}

enum class FindMStatus {
  found,                // smallest m within the cap has p_M^(m) >= p
  boundary_case,        // p equals the closed-form supremum; attainment open
  not_found_within_cap, // p below the supremum: a finite m exists past the cap
  unreachable,          // p above the supremum: certified impossible for all m
};

constexpr const char* find_m_status_name(FindMStatus status) {
  switch (status) {
    case FindMStatus::found: return "found";
    case FindMStatus::boundary_case: return "boundary-case";
    case FindMStatus::not_found_within_cap: return "not-found-within-cap";
    case FindMStatus::unreachable: return "unreachable";
  }
  return "unknown";
}

template <ScalarNumber N> struct FindMResult {
  FindMStatus status = FindMStatus::not_found_within_cap;
  int copies = 0; // set when status == found
  N bound = number_traits<N>::zero();    // closed-form supremum
  N radicand = number_traits<N>::zero(); // m-copy pMax at the found m

  bool operator==(const FindMResult&) const = default;
};

/// Searches for the smallest copy count m <= m_cap whose per-copy average
/// reaches p, comparing pMax(m copies) >= p^m so the decision stays exact.
/// Targets strictly above the closed-form supremum are rejected outright with
/// that bound as the certificate. Targets equal to the supremum are still
/// scanned — the bound itself can be attained at finite m — and only an
/// exhausted scan reports the boundary case, whose general attainability is
/// an open problem.
template <ScalarNumber N>
FindMResult<N> find_finite_m(const CompressedSpectrum<N>& source,
                             const CompressedSpectrum<N>& target, const N& p, int m_cap) {
  using T = number_traits<N>;
  if (!(p > T::zero()) || p > T::one())
    raise(errc::invalid_probability,
          "target probability must lie in (0, 1], got " + T::str(p));
  if (m_cap < 1) raise(errc::copy_count_zero, "the copy-count cap must be at least 1");

  FindMResult<N> result;
  result.bound = closed_form_pe(source, target);
  if (p > result.bound && !T::equal(p, result.bound)) {
    result.status = FindMStatus::unreachable;
    return result;
  }
  N p_power = T::one();
  for (int m = 1; m <= m_cap; ++m) {
    p_power *= p;
    const N radicand = p_multicopy_radicand(source, target, m);
    if (radicand > p_power || T::equal(radicand, p_power)) {
      result.status = FindMStatus::found;
      result.copies = m;
      result.radicand = radicand;
      return result;
    }
  }
  result.status = T::equal(p, result.bound) ? FindMStatus::boundary_case
                                            : FindMStatus::not_found_within_cap;
  return result;
}

} // namespace locc

#endif // LOCC_MULTICOPY_HPP
