#include "chisini/error.hpp"

namespace chisini {

std::string_view fault_name(fault f) {
  switch (f) {
    case fault::negative_nodes: return "negative_nodes";
    case fault::inconsistent_dual: return "inconsistent_dual";
    case fault::degenerate_denominator: return "degenerate_denominator";
    case fault::denominator_not_positive: return "denominator_not_positive";
    case fault::non_integral_chi: return "non_integral_chi";
    case fault::genus_violation: return "genus_violation";
    case fault::not_canonical_shape: return "not_canonical_shape";
    case fault::no_threshold_found: return "no_threshold_found";
    case fault::budget_exceeded: return "budget_exceeded";
    case fault::index_out_of_range: return "index_out_of_range";
    case fault::invalid_argument: return "invalid_argument";
    case fault::parse_error: return "parse_error";
  }
  return "unknown";
}

domain_error::domain_error(fault f, const std::string& msg)
    : std::runtime_error(msg), kind_(f) {}

void raise(fault f, const std::string& msg) { throw domain_error(f, msg); }

}  // namespace chisini
