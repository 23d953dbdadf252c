#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chisini {

/// Every way a computation can refuse its input. The CLI prints the name and
/// exits with code 2; library callers can switch on kind().
enum class fault {
  negative_nodes,            // genus formula forces n < 0
  inconsistent_dual,         // linear and quadratic dual formulas disagree
  degenerate_denominator,    // 3d + g - 1 <= 0
  denominator_not_positive,  // 2(3d + g - 1) - c <= 0
  non_integral_chi,          // holomorphic Euler characteristic not integral
  genus_violation,           // generic-fiber genus d - N + 1 < 0
  not_canonical_shape,       // curve data not of canonical-multiple shape
  no_threshold_found,        // positivity scan exhausted its horizon
  budget_exceeded,           // enumeration larger than the configured budget
  index_out_of_range,        // word references a missing generator
  invalid_argument,          // precondition on a parameter violated
  parse_error,               // malformed presentation file
};

std::string_view fault_name(fault f);

class domain_error : public std::runtime_error {
 public:
  domain_error(fault f, const std::string& msg);
  fault kind() const noexcept { return kind_; }

 private:
  fault kind_;
};

[[noreturn]] void raise(fault f, const std::string& msg);

}  // namespace chisini
