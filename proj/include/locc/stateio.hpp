#ifndef LOCC_STATEIO_HPP
#define LOCC_STATEIO_HPP

#include "locc/spectra.hpp"

#include <string>
#include <vector>

namespace locc {

/// One coefficient literal ("0.4", "2/5", "1e-2") in the active mode's
/// scalar type. Decimal literals are parsed exactly in base 10 first; float
/// mode rounds once at the end instead of trusting strtod.
template <ScalarNumber N> N parse_scalar(const std::string& text) {
  const Rational exact = parse_exact_number(text);
  if constexpr (number_traits<N>::exact)
    return exact;
  else
    return to_double(exact);
}

/// Splits an inline comma-separated coefficient list into literals.
std::vector<std::string> split_coefficient_list(const std::string& text);

/// Reads coefficient literals from a state file: plain text with one
/// coefficient per line and '#' comments, or a JSON array of literal strings.
std::vector<std::string> load_state_file(const std::string& path);

/// Resolves a command-line state argument: a path to an existing file is
/// loaded as a state file, anything else is treated as an inline list.
std::vector<std::string> state_tokens(const std::string& argument);

/// Full pipeline from a command-line state argument to a validated spectrum.
template <ScalarNumber N> CompressedSpectrum<N> parse_state(const std::string& argument) {
  const std::vector<std::string> tokens = state_tokens(argument);
  std::vector<N> coefficients;
  coefficients.reserve(tokens.size());
  for (const std::string& token : tokens) coefficients.push_back(parse_scalar<N>(token));
  return from_coefficients(coefficients);
}

} // namespace locc

#endif // LOCC_STATEIO_HPP
