// JSON serialization round-trips for every report type, in both modes.

#include "locc/json_io.hpp"

#include "doctest.h"

#include "locc/catalysis.hpp"
#include "locc/multicopy.hpp"

namespace {

using namespace locc;

const CompressedSpectrum<Rational> kPsi1 = from_coefficients<Rational>(
    {Rational(2, 5), Rational(2, 5), Rational(1, 10), Rational(1, 10)});
const CompressedSpectrum<Rational> kPsi2 =
    from_coefficients<Rational>({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
const CompressedSpectrum<Rational> kPhi =
    from_coefficients<Rational>({Rational(3, 5), Rational(2, 5)});

TEST_CASE("exact scalars serialize as numerator/denominator strings") {
  const Json j = scalar_json(Rational(4, 5));
  CHECK(j.at("num").get<std::string>() == "4");
  CHECK(j.at("den").get<std::string>() == "5");
  CHECK(scalar_from_json<Rational>(j) == Rational(4, 5));

  // huge values survive the string representation losslessly
  const Rational tiny(1, pow_big(BigInt(5), 40));
  CHECK(scalar_from_json<Rational>(scalar_json(tiny)) == tiny);
}

TEST_CASE("float scalars serialize as plain numbers") {
  const Json j = scalar_json(0.8);
  CHECK(j.is_number());
  CHECK(scalar_from_json<double>(j) == 0.8);
}

TEST_CASE("spectra round-trip including implicit zeros") {
  const auto padded = from_coefficients<Rational>(
      {Rational(2, 5), Rational(2, 5), Rational(1, 5), Rational(0)});
  CHECK(spectrum_from_json<Rational>(spectrum_json(padded)) == padded);
  const auto big = tensor_power(kPhi, 40); // dimension 2^40 exceeds machine ints
  CHECK(spectrum_from_json<Rational>(spectrum_json(big)) == big);
}

TEST_CASE("conversion reports round-trip") {
  const auto report = p_max(kPsi1, kPsi2);
  CHECK(conversion_report_from_json<Rational>(conversion_report_json(report)) == report);
}

TEST_CASE("multicopy traces round-trip") {
  const auto trace = estimate_pm(kPsi1, kPsi2, 4);
  CHECK(trace_from_json<Rational>(trace_json(trace)) == trace);
}

TEST_CASE("copy-count search results round-trip across all statuses") {
  const auto found = find_finite_m(kPsi1, kPsi2, Rational(9, 10), 20);
  CHECK(find_m_from_json<Rational>(find_m_json(found)) == found);

  const auto chi1 = from_coefficients<Rational>(
      {Rational(40, 101), Rational(40, 101), Rational(10, 101), Rational(10, 101),
       Rational(1, 101)});
  const auto chi2 = from_coefficients<Rational>(
      {Rational(50, 101), Rational(25, 101), Rational(20, 101), Rational(5, 101),
       Rational(1, 101)});
  const auto boundary = find_finite_m(chi1, chi2, Rational(1), 4);
  CHECK(find_m_from_json<Rational>(find_m_json(boundary)) == boundary);

  const auto low_rank = from_coefficients<Rational>({Rational(1, 2), Rational(1, 2)});
  const auto unreachable = find_finite_m(low_rank, kPsi2, Rational(1, 2), 4);
  CHECK(find_m_from_json<Rational>(find_m_json(unreachable)) == unreachable);
}

TEST_CASE("protocol reports round-trip") {
  const auto report = simulate_protocol(kPsi1, kPsi2, kPhi, 2);
  CHECK(protocol_from_json<Rational>(protocol_json(report)) == report);
}

TEST_CASE("catalyst constructions round-trip, exact or downgraded") {
  const auto exact = construct_catalyst(kPsi1, kPsi2, 3);
  CHECK(construction_from_json<Rational>(construction_json(exact)) == exact);
  const auto downgraded = construct_catalyst(kPsi1, kPsi2, 2);
  CHECK(construction_from_json<Rational>(construction_json(downgraded)) == downgraded);
}

TEST_CASE("search results round-trip") {
  const auto result = search_catalyst(kPsi1, kPsi2, 2, 6);
  CHECK(search_from_json<Rational>(search_json(result)) == result);
}

TEST_CASE("float-mode reports round-trip bit-identically") {
  const auto s = from_coefficients<double>({0.4, 0.4, 0.1, 0.1});
  const auto t = from_coefficients<double>({0.5, 0.25, 0.25});
  const auto report = p_max(s, t);
  CHECK(conversion_report_from_json<double>(conversion_report_json(report)) == report);
  const auto trace = estimate_pm(s, t, 3);
  CHECK(trace_from_json<double>(trace_json(trace)) == trace);
}

}  // namespace
