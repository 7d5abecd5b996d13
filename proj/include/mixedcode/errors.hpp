#pragma once

#include <stdexcept>
#include <string>

namespace mixedcode {

enum class errc {
  non_prime_power,
  out_of_range,
  division_by_zero,
  length_mismatch,
  empty_support,
  side_condition_violated,
  too_large,
  zero_code,
  zero_column,
  loop_error,
  overflow,
  not_found_within_cap,
  duplicate_element,
  invalid_metric,
  internal_error,
  io_failure,
};

class error : public std::runtime_error {
public:
  errc code;
  error(errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

}  // namespace mixedcode
