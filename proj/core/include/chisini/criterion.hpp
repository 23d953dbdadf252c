#pragma once

#include "chisini/arith.hpp"
#include "chisini/invariants.hpp"

namespace chisini {

/// Outcome of the degree-threshold uniqueness test for a generic cover of
/// degree N branched along a fixed cuspidal curve.
struct chisini_verdict {
  /// 4(3d+g-1) / (2(3d+g-1) - c), exact.
  Rat threshold;
  /// True iff N > threshold; then no second non-equivalent generic cover with
  /// the same branch curve exists (of any degree).
  bool unique = false;
  /// Greatest integer degree a competing cover could have: floor(threshold).
  /// The bound is attained when the threshold is an integer (the failure of
  /// the inequality is non-strict).
  Int max_competing_degree;
};

/// Raises denominator_not_positive when 2(3d+g-1) - c <= 0.
chisini_verdict chisini_check(const curve_invariants& inv, const Int& N);

/// Intersection numbers on the normalized fiber product of two generic covers
/// of degrees N1, N2 with the same branch curve. hodge_det_i is the
/// determinant of the intersection form on <R~, C~_i>; a positive value
/// contradicts the index theorem and forbids the pair.
struct fiber_numbers {
  Int r_sq;        ///< R~^2  = 2(3d+g-1) - c
  Int c1_sq;       ///< C~1^2 = (N2 - 2)(3d+g-1) - c
  Int c2_sq;       ///< C~2^2 = (N1 - 2)(3d+g-1) - c
  Int r_dot_c;     ///< (R~, C~_i) = c
  Int hodge_det1;  ///< r_sq * c1_sq - c^2
  Int hodge_det2;  ///< r_sq * c2_sq - c^2
};

fiber_numbers fiber_product_numbers(const curve_invariants& inv, const Int& N1, const Int& N2);

/// True iff d > 3(g-1), in which case the candidate window for a competing
/// cover of degree >= 5 is empty and uniqueness holds outright.
bool degree_genus_guarantee(const Int& d, const Int& g);

}  // namespace chisini
