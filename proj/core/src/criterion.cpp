#include "chisini/criterion.hpp"

#include "chisini/error.hpp"

namespace chisini {

chisini_verdict chisini_check(const curve_invariants& inv, const Int& N) {
  Int t = 3 * inv.d + inv.g - 1;
  Int den = 2 * t - inv.c;
  if (den <= 0) {
    raise(fault::denominator_not_positive, "2(3d + g - 1) - c = " + den.str());
  }
  chisini_verdict v;
  v.threshold = Rat(4 * t, den);
  v.unique = Rat(N) > v.threshold;
  v.max_competing_degree = floor_rat(v.threshold);
  return v;
}

fiber_numbers fiber_product_numbers(const curve_invariants& inv, const Int& N1, const Int& N2) {
  Int t = 3 * inv.d + inv.g - 1;
  fiber_numbers f;
  f.r_sq = 2 * t - inv.c;
  f.c1_sq = (N2 - 2) * t - inv.c;
  f.c2_sq = (N1 - 2) * t - inv.c;
  f.r_dot_c = inv.c;
  f.hodge_det1 = f.r_sq * f.c1_sq - inv.c * inv.c;
  f.hodge_det2 = f.r_sq * f.c2_sq - inv.c * inv.c;
  return f;
}

bool degree_genus_guarantee(const Int& d, const Int& g) { return d > 3 * (g - 1); }

}  // namespace chisini
