#ifndef LOCC_ERROR_HPP
#define LOCC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace locc {

enum class errc {
  negative_coefficient,
  empty_spectrum,
  not_normalizable,
  sum_out_of_tolerance,
  copy_count_zero,
  copy_count_too_small,
  dimension_too_large,
  nonpositive_weight,
  invalid_probability,
  rank_exceeds_k,
  rank_deficient_catalyst,
  unsupported_dimension,
  parse_error,
};

const char* errc_name(errc code);

/// Validation/domain error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

} // namespace locc

#endif // LOCC_ERROR_HPP
