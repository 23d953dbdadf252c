#include "chisini/search.hpp"

#include <algorithm>

#include "chisini/criterion.hpp"
#include "chisini/error.hpp"

namespace chisini {

namespace {

// first violated constraint among the enabled ones, empty string if none
std::string first_violation(const search_profile& p, const Int& d, const Int& g, const Int& c,
                            const Int& n) {
  if (p.require_genus_formula && n < 0) return "genus_formula";
  if (p.require_cusp_upper && (c > 4 * d + 2 * g - 2 || c > 3 * d + 3 * g - 3))
    return "cusp_upper";
  if (p.require_cusp_lower && 3 * d + g - 1 > 2 * c) return "cusp_lower";
  if (p.require_divisibility && (c % 3 != 0 || n % 4 != 0)) return "divisibility";
  if (p.require_dual_nonneg) {
    // linear dual formulas in (2d, g, c); the quadratic cross-checks hold
    // identically when n is defined by the genus formula, so compute directly
    Int delta = 4 * d + 2 * g - 2 - c;
    Int gamma = 6 * d + 6 * g - 6 - 2 * c;
    Int nu = ((delta - 1) * (delta - 2) - 2 * g - 2 * gamma) / 2;
    if (delta < 1 || gamma < 0 || nu < 0) return "dual_nonneg";
  }
  return {};
}

}  // namespace

search_result find_potential_counterexamples(const search_profile& profile) {
  if (profile.d_min < 1 || profile.d_max < profile.d_min || profile.g_min < 0 ||
      profile.g_max < profile.g_min || profile.n_min < 3) {
    raise(fault::invalid_argument, "need 1 <= d_min <= d_max, 0 <= g_min <= g_max, n_min >= 3");
  }
  search_result result;
  for (Int d = profile.d_min; d <= profile.d_max; ++d) {
    for (Int g = profile.g_min; g <= profile.g_max; ++g) {
      Int t = 3 * d + g - 1;
      if (t <= 0) continue;
      // threshold 4t/(2t-c) reaches n_min iff c >= 2t(n_min-2)/n_min, and the
      // denominator stays positive iff c <= 2t - 1
      Int c_lo = ceil_rat(Rat(2 * t * (profile.n_min - 2), profile.n_min));
      if (c_lo < 0) c_lo = 0;
      Int c_hi = 2 * t - 1;
      for (Int c = c_lo; c <= c_hi; ++c) {
        Int n = genus_formula_total(d) - g - c;
        std::string reason = first_violation(profile, d, g, c, n);
        if (!reason.empty()) {
          result.eliminated.push_back({d, g, c, std::move(reason)});
          continue;
        }
        Rat threshold(4 * t, 2 * t - c);
        Int n_hi = std::min({floor_rat(threshold), line_degree_bound(d),
                             floor_rat(hodge_degree_bound(d, g))});
        if (n_hi < profile.n_min) {
          result.eliminated.push_back({d, g, c, "degree_bounds"});
          continue;
        }
        result.survivors.push_back(
            {curve_invariants{d, g, c, n}, profile.n_min, n_hi, std::move(threshold)});
      }
    }
  }
  return result;
}

canonical_check canonical_conditions(const curve_invariants& inv) {
  Int shape = inv.g - 3 * inv.d - 1;
  if (shape <= 0) {
    raise(fault::not_canonical_shape, "g - 3d - 1 = " + shape.str() + " is not positive");
  }
  Int t = 3 * inv.d + inv.g - 1;
  if (t <= 0) {
    raise(fault::degenerate_denominator, "3d + g - 1 = " + t.str());
  }
  canonical_check res;
  res.m = Rat(2 * inv.d, shape);
  res.k = Rat(shape * shape, t);
  res.N = Rat(4 * inv.d * inv.d, t);
  res.p_a = res.N + Rat(3 * inv.g - 3 - 9 * inv.d - inv.c, 12);
  auto positive_integer = [](const Rat& r) { return rat_is_integer(r) && r > 0; };
  res.all_integral = positive_integer(res.m) && positive_integer(res.k) &&
                     positive_integer(res.N) && positive_integer(res.p_a);
  if (res.all_integral) {
    Int m = rat_to_int(res.m);
    Int k = rat_to_int(res.k);
    Int p_a = rat_to_int(res.p_a);
    for (Int r = 2; r <= 3 * m; ++r) {
      res.h0_dims.push_back(r * (r - 1) * k / 2 + p_a);
    }
  }
  return res;
}

bool double_point_degree_check(const curve_invariants& inv, const Int& m, const Int& k) {
  return 2 * inv.c + 2 * inv.n == ((2 * inv.d - 6) * m - 2) * (3 * m + 1) * k;
}

}  // namespace chisini
