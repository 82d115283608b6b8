#ifndef LOCC_JSON_IO_HPP
#define LOCC_JSON_IO_HPP

#include "locc/catalysis.hpp"

#include "json.hpp"

#include <string>

namespace locc {

using Json = nlohmann::json;

/// Scalars serialize as {"num", "den"} strings in exact mode — integer
/// precision is unbounded, so JSON numbers cannot carry them — and as plain
/// numbers in float mode. Every *_json function below has a *_from_json
/// inverse and the pair round-trips values identically.
template <ScalarNumber N> Json scalar_json(const N& x) {
  if constexpr (number_traits<N>::exact)
    return Json{{"num", numerator(x).str()}, {"den", denominator(x).str()}};
  else
    return Json(x);
}

template <ScalarNumber N> N scalar_from_json(const Json& j) {
  if constexpr (number_traits<N>::exact)
    return Rational(BigInt(j.at("num").get<std::string>()),
                    BigInt(j.at("den").get<std::string>()));
  else
    return j.get<double>();
}

inline Json big_json(const BigInt& x) { return x.str(); }
inline BigInt big_from_json(const Json& j) { return BigInt(j.get<std::string>()); }

template <ScalarNumber N> Json spectrum_json(const CompressedSpectrum<N>& spectrum) {
  Json blocks = Json::array();
  for (const auto& b : spectrum.blocks)
    blocks.push_back({{"value", scalar_json(b.value)}, {"multiplicity", big_json(b.multiplicity)}});
  return Json{{"blocks", std::move(blocks)}, {"dimension", big_json(spectrum.total_dimension)}};
}

template <ScalarNumber N> CompressedSpectrum<N> spectrum_from_json(const Json& j) {
  CompressedSpectrum<N> spectrum;
  for (const auto& b : j.at("blocks"))
    spectrum.blocks.push_back(
        {scalar_from_json<N>(b.at("value")), big_from_json(b.at("multiplicity"))});
  spectrum.total_dimension = big_from_json(j.at("dimension"));
  return spectrum;
}

template <ScalarNumber N> Json conversion_report_json(const ConversionReport<N>& report) {
  return Json{{"p_max", scalar_json(report.p_max)},
              {"argmin_position", big_json(report.argmin_position)},
              {"source_tail", scalar_json(report.source_tail)},
              {"target_tail", scalar_json(report.target_tail)}};
}

template <ScalarNumber N> ConversionReport<N> conversion_report_from_json(const Json& j) {
  return {scalar_from_json<N>(j.at("p_max")), big_from_json(j.at("argmin_position")),
          scalar_from_json<N>(j.at("source_tail")), scalar_from_json<N>(j.at("target_tail"))};
}

template <ScalarNumber N> Json trace_json(const MulticopyTrace<N>& trace) {
  Json entries = Json::array();
  for (const auto& e : trace.entries)
    entries.push_back({{"copies", e.copies},
                       {"radicand", scalar_json(e.radicand)},
                       {"p_avg", scalar_json(e.p_avg)},
                       {"blocks_source", e.blocks_source},
                       {"blocks_target", e.blocks_target}});
  return Json{{"entries", std::move(entries)},
              {"best_m", trace.best_m},
              {"best_radicand", scalar_json(trace.best_radicand)},
              {"best_p_avg", scalar_json(trace.best_p_avg)},
              {"closed_form_bound", scalar_json(trace.closed_form_bound)}};
}

template <ScalarNumber N> MulticopyTrace<N> trace_from_json(const Json& j) {
  MulticopyTrace<N> trace;
  for (const auto& e : j.at("entries"))
    trace.entries.push_back({e.at("copies").get<int>(), scalar_from_json<N>(e.at("radicand")),
                             scalar_from_json<N>(e.at("p_avg")),
                             e.at("blocks_source").get<std::size_t>(),
                             e.at("blocks_target").get<std::size_t>()});
  trace.best_m = j.at("best_m").get<int>();
  trace.best_radicand = scalar_from_json<N>(j.at("best_radicand"));
  trace.best_p_avg = scalar_from_json<N>(j.at("best_p_avg"));
  trace.closed_form_bound = scalar_from_json<N>(j.at("closed_form_bound"));
  return trace;
}

template <ScalarNumber N> Json find_m_json(const FindMResult<N>& result) {
  return Json{{"status", find_m_status_name(result.status)},
              {"copies", result.copies},
              {"bound", scalar_json(result.bound)},
              {"radicand", scalar_json(result.radicand)}};
}

template <ScalarNumber N> FindMResult<N> find_m_from_json(const Json& j) {
  FindMResult<N> result;
  const std::string name = j.at("status").get<std::string>();
  for (const FindMStatus status :
       {FindMStatus::found, FindMStatus::boundary_case, FindMStatus::not_found_within_cap,
        FindMStatus::unreachable})
    if (name == find_m_status_name(status)) result.status = status;
  result.copies = j.at("copies").get<int>();
  result.bound = scalar_from_json<N>(j.at("bound"));
  result.radicand = scalar_from_json<N>(j.at("radicand"));
  return result;
}

template <ScalarNumber N> Json protocol_json(const ProtocolReport<N>& report) {
  return Json{{"p1", scalar_json(report.p1)},
              {"p2_lower_bound", scalar_json(report.p2_lower_bound)},
              {"p3", scalar_json(report.p3)},
              {"product_bound", scalar_json(report.product_bound)},
              {"m_copy_p_max", scalar_json(report.m_copy_p_max)},
              {"k", big_json(report.k)},
              {"gamma_k", scalar_json(report.gamma_k)}};
}

template <ScalarNumber N> ProtocolReport<N> protocol_from_json(const Json& j) {
  return {scalar_from_json<N>(j.at("p1")),
          scalar_from_json<N>(j.at("p2_lower_bound")),
          scalar_from_json<N>(j.at("p3")),
          scalar_from_json<N>(j.at("product_bound")),
          scalar_from_json<N>(j.at("m_copy_p_max")),
          big_from_json(j.at("k")),
          scalar_from_json<N>(j.at("gamma_k"))};
}

template <ScalarNumber N> Json construction_json(const CatalystConstruction<N>& built) {
  return Json{{"catalyst", spectrum_json(built.catalyst)},
              {"p_m_radicand", scalar_json(built.p_m_radicand)},
              {"p_m", built.p_m},
              {"copies", built.copies},
              {"weights_exact", built.weights_exact}};
}

template <ScalarNumber N> CatalystConstruction<N> construction_from_json(const Json& j) {
  return {spectrum_from_json<N>(j.at("catalyst")), scalar_from_json<N>(j.at("p_m_radicand")),
          j.at("p_m").get<double>(), j.at("copies").get<int>(),
          j.at("weights_exact").get<bool>()};
}

template <ScalarNumber N> Json search_json(const CatalystSearchResult<N>& result) {
  return Json{{"best_catalyst", spectrum_json(result.best_catalyst)},
              {"best_p", scalar_json(result.best_p)},
              {"baseline", scalar_json(result.baseline)},
              {"grid_resolution", result.grid_resolution}};
}

template <ScalarNumber N> CatalystSearchResult<N> search_from_json(const Json& j) {
  return {spectrum_from_json<N>(j.at("best_catalyst")), scalar_from_json<N>(j.at("best_p")),
          scalar_from_json<N>(j.at("baseline")), j.at("grid_resolution").get<int>()};
}

} // namespace locc

#endif // LOCC_JSON_IO_HPP
