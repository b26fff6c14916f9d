#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asck {

using Point = std::uint32_t;
using Color = std::uint32_t;

enum class Errc {
  not_square,
  non_contiguous_colors,
  not_a_partition_of_diagonal,
  not_transpose_closed,
  inconsistent_intersection_numbers,
  invalid_color,
  not_homogeneous,
  rank_too_large,
  too_few_points,
  not_thin_element,
  not_a_scheme_equivalence,
  quotient_validation_failed,
  not_a_block,
  restriction_validation_failed,
  wreath_validation_failed,
  invalid_group_table,
  not_strongly_connected,
  no_arcs,
  invalid_p,
  not_symmetric,
  has_loops,
  diagonal_color,
  not_prime,
  invalid_argument,
  format_error,
};

std::string_view to_string(Errc code);

/**
 * Base exception for every typed failure raised by the library. The code
 * identifies the failure class; the message carries the human-readable
 * context (witness cells, offending ids).
 */
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace asck
