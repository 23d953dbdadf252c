#pragma once

#include <cstddef>
#include <vector>

namespace chisini {

/// One subgroup of S_{n1} x S_{n2} that contains ((1 2), (1 2)) and projects
/// onto both factors.
struct product_subgroup_info {
  std::size_t order = 0;
  std::size_t orbit_of_origin = 0;        ///< orbit size of the point (1, 1)
  std::vector<std::size_t> orbit_sizes;   ///< full decomposition, ascending
  bool diagonal_conjugate = false;        ///< equals {(s, t s t^-1)} for some t
};

struct product_orbit_report {
  int n1 = 0, n2 = 0;
  std::size_t subgroups_containing_marker = 0;  ///< all overgroups of ((1 2),(1 2))
  std::size_t qualifying = 0;                   ///< ... with both projections onto
  std::vector<product_subgroup_info> entries;   ///< qualifying only, sorted by order
  std::size_t violations = 0;  ///< qualifying, intransitive, not diagonal-conjugate
};

/// Exhaustively enumerates the subgroups of S_{n1} x S_{n2} containing the
/// marker ((1 2), (1 2)) (iterated closure of the cyclic seed with one extra
/// element, one coset representative at a time), keeps those with surjective
/// projections, and checks the orbit dichotomy: the action on
/// {1..n1} x {1..n2} is transitive unless n1 = n2 and the subgroup is the
/// relabeled diagonal. Expected violations: zero.
/// Guarded to 2 <= n1, n2 <= 4 (budget_exceeded beyond).
product_orbit_report verify_product_orbit_dichotomy(int n1, int n2);

}  // namespace chisini
