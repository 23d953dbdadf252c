#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chisini/arith.hpp"

namespace chisini {

/// Numerical data of a plane cuspidal curve of even degree 2d with geometric
/// genus g, c ordinary cusps and n nodes, the discriminant-curve candidate of
/// a generic cover of the plane.
struct curve_invariants {
  Int d;  ///< half the plane degree (candidate curves have even degree)
  Int g;
  Int c;
  Int n;

  friend bool operator==(const curve_invariants&, const curve_invariants&) = default;
};

/// Data of the dual curve: its degree, cusp count and node count.
struct dual_invariants {
  Int delta;
  Int gamma;
  Int nu;

  friend bool operator==(const dual_invariants&, const dual_invariants&) = default;
};

/// Invariants of a degree-N covering surface forced by the branch curve.
struct morphism_invariants {
  Int N;
  Int K2;     ///< canonical self-intersection
  Int euler;  ///< topological Euler number
  Int p_a;    ///< holomorphic Euler characteristic chi(O); 12*p_a = K2 + euler
  Int R2;     ///< ramification-curve self-intersection, 3d + g - 1
  Int gE;     ///< genus of the preimage of a generic line, d - N + 1
};

/// (2d-1)(d-1): the total genus + cusps + nodes budget of a curve of degree 2d.
Int genus_formula_total(const Int& d);

bool genus_consistent(const curve_invariants& inv);

/// Node count forced by (d, g, c); raises negative_nodes when the budget is
/// overdrawn.
Int nodes_from_genus(const Int& d, const Int& g, const Int& c);

/// Dual data of a plane curve of arbitrary degree with the given genus, cusp
/// and node counts. Computed by the linear formulas
///   delta = 2*deg + 2g - 2 - cusps,
///   gamma = 3*deg + 6g - 6 - 2*cusps,
///   2*nu  = (delta-1)(delta-2) - 2g - 2*gamma,
/// then cross-checked against the quadratic formulas
///   delta = deg(deg-1) - 2*nodes - 3*cusps   and
///   deg   = delta(delta-1) - 2*nu - 3*gamma.
/// Raises inconsistent_dual when the two routes disagree (equivalently, when
/// the genus formula fails for the input).
dual_invariants dual_of_plane_curve(const Int& deg, const Int& g, const Int& cusps,
                                    const Int& nodes);

/// dual_of_plane_curve specialised to a candidate discriminant curve.
dual_invariants plucker_dual(const curve_invariants& inv);

/// Upper bound 4d^2 / (3d + g - 1) on the degree of any generic cover branched
/// along the curve (signature of the fiber-product intersection form).
/// Exact rational; raises degenerate_denominator when 3d + g - 1 <= 0.
Rat hodge_degree_bound(const Int& d, const Int& g);

/// Upper bound d + 1 from the preimage of a line.
Int line_degree_bound(const Int& d);

/// All covering-surface invariants for a candidate curve and degree N.
/// Raises non_integral_chi when 12 does not divide 12N + 3g - 3 - 9d - c and
/// genus_violation when d - N + 1 < 0. The identity 12*p_a = K2 + euler is
/// verified internally.
morphism_invariants complete_morphism_invariants(const curve_invariants& inv, const Int& N);

/// One validity condition, by name. `waived` marks conditions that do not
/// apply to the smooth-branch double plane (c = n = 0).
struct check_result {
  std::string name;
  bool passed = false;
  bool waived = false;
  std::string detail;
};

struct validation_report {
  std::vector<check_result> checks;
  /// c = n = 0: double plane branched along a smooth curve. The cusp lower
  /// bound does not apply (the complement's fundamental group is abelian).
  bool smooth_double_plane = false;

  bool all_passed() const;
  const check_result* find(std::string_view name) const;
};

/// Runs every known necessary condition on a candidate discriminant curve:
///   fields_nonnegative, genus_formula, cusp_upper_delta (c <= 4d + 2g - 2),
///   cusp_upper_gamma (c <= 3d + 3g - 3), cusp_lower (3d + g - 1 <= 2c,
///   waived for the smooth double plane), cusps_mod_3, nodes_mod_4,
///   dual_nonnegative (delta >= 1, gamma >= 0, nu >= 0).
validation_report validate_discriminant_candidate(const curve_invariants& inv);

}  // namespace chisini
