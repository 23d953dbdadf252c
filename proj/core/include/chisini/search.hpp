#pragma once

#include <string>
#include <vector>

#include "chisini/arith.hpp"
#include "chisini/invariants.hpp"

namespace chisini {

/// Lattice window and necessary-condition toggles for the counterexample
/// search. Each toggle enables one family of checks; disabling one widens the
/// survivor set (used to measure how much each condition cuts).
struct search_profile {
  Int d_min = 1;
  Int d_max = 6;
  Int g_min = 0;
  Int g_max = 3;
  /// Competing-degree floor: only curves that could carry a second cover of
  /// degree >= n_min are interesting.
  Int n_min = 5;

  bool require_genus_formula = true;  ///< n >= 0
  bool require_cusp_upper = true;     ///< c <= 4d+2g-2 and c <= 3d+3g-3
  bool require_cusp_lower = true;     ///< 3d+g-1 <= 2c
  bool require_divisibility = true;   ///< c = 0 mod 3, n = 0 mod 4
  bool require_dual_nonneg = true;    ///< delta >= 1, gamma >= 0, nu >= 0
};

struct search_survivor {
  curve_invariants curve;
  /// Competing covers must have degree in [N_lo, N_hi] =
  /// [n_min, min(floor(threshold), d+1, floor(hodge bound))].
  Int N_lo, N_hi;
  Rat threshold;
};

struct search_elimination {
  Int d, g, c;
  std::string reason;  ///< name of the first violated constraint
};

struct search_result {
  std::vector<search_survivor> survivors;
  std::vector<search_elimination> eliminated;
};

/// Enumerates every (d, g, c) in the window whose uniqueness threshold
/// reaches n_min (ceil(2T(n_min-2)/n_min) <= c <= 2T-1, T = 3d+g-1), applies
/// the enabled constraints in a fixed order and reports survivors with their
/// admissible competing-degree interval. Eliminations carry the first
/// violated constraint: genus_formula, cusp_upper, cusp_lower, divisibility,
/// dual_nonneg, or degree_bounds (interval empty below n_min).
search_result find_potential_counterexamples(const search_profile& profile);

/// Rational solutions of the canonical-multiple shape equations for a curve:
///   m = 2d / (g - 3d - 1),   k = (g - 3d - 1)^2 / (3d + g - 1),
///   N = 4d^2 / (3d + g - 1), p_a = N + (3g - 3 - 9d - c) / 12.
/// all_integral is true when each is a positive integer; h0_dims then lists
/// r(r-1)k/2 + p_a for r = 2..3m (dimensions of the multiple-class linear
/// systems the covering surface must carry).
struct canonical_check {
  Rat m;
  Rat k;
  Rat N;
  Rat p_a;
  bool all_integral = false;
  std::vector<Int> h0_dims;
};

/// Raises not_canonical_shape when g - 3d - 1 <= 0 and degenerate_denominator
/// when 3d + g - 1 <= 0.
canonical_check canonical_conditions(const curve_invariants& inv);

/// Double-point count identity for a canonical-multiple curve:
///   2c + 2n == ((2d-6)m - 2) * (3m+1)k.
bool double_point_degree_check(const curve_invariants& inv, const Int& m, const Int& k);

}  // namespace chisini
