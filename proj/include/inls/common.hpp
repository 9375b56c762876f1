#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace inls {

using complexd = std::complex<double>;

inline constexpr double four_pi = 4.0 * 3.14159265358979323846;
inline constexpr double pi = 3.14159265358979323846;

/// Failure categories; the CLI maps configuration errors to exit code 2
/// and numeric/solver errors to exit code 3.
enum class errc {
  invalid_configuration,
  invalid_exponent,
  incompatible_fields,
  solver_failure,
  fit_domain,
  modulation_undefined,
  insufficient_data,
  construction_failure,
  numeric_failure,
};

struct error : std::runtime_error {
  errc kind;
  error(errc k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline bool is_config_error(errc k) {
  switch (k) {
    case errc::invalid_configuration:
    case errc::invalid_exponent:
    case errc::incompatible_fields:
    case errc::insufficient_data:
      return true;
    default:
      return false;
  }
}

inline void require(bool cond, errc k, const std::string& msg) {
  if (!cond) throw error(k, msg);
}

}  // namespace inls
