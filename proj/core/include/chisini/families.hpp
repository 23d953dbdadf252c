#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chisini/arith.hpp"
#include "chisini/criterion.hpp"
#include "chisini/invariants.hpp"

namespace chisini {

/// Branch curve generated by a known surface family, with the cover degree
/// and the uniqueness verdict for that degree.
struct family_output {
  curve_invariants curve;
  Int N;
  /// Degree-2 cover branched along a smooth curve: the cusp lower bound and
  /// the inequality-based uniqueness analysis do not apply.
  bool smooth_double_plane = false;
  std::optional<chisini_verdict> verdict;
  std::vector<std::string> notes;
};

/// Surface of general type with K ample, K^2 = k, chi(O) = p_a, covering the
/// plane via the m-th canonical multiple:
///   N = m^2 k,  2d = m(3m+1)k,  g - 1 = (3m+2)(3m+1)k / 2,
///   c = (12m^2 + 9m + 3)k - 12 p_a,  n by the genus formula.
/// Preconditions m, k, p_a >= 1 and N >= 3 (invalid_argument), node count
/// nonnegative (negative_nodes). c may come out negative for parameters that
/// admit no surface; validation reports that.
family_output general_type_mk(const Int& m, const Int& k, const Int& p_a);

struct general_type_exception {
  Int m, k, p_a;
  curve_invariants curve;
  Int N;
  Rat threshold;
  Int max_competing_degree;
};

struct general_type_exception_list {
  std::vector<general_type_exception> cases;
  /// Max of the per-case competing-degree bounds: every non-equivalent cover
  /// of any exceptional curve in the list has degree <= degree_bound.
  Int degree_bound;
};

/// Sweeps 1 <= m <= m_max, 1 <= k <= k_max, 1 <= p_a <= pa_max with
/// N = m^2 k >= 3 and returns the cases whose curve exists (n >= 0) and
/// passes validation but whose uniqueness inequality fails.
general_type_exception_list enumerate_general_type_exceptions(const Int& k_max,
                                                              const Int& pa_max,
                                                              const Int& m_max = 8);

/// Del Pezzo surface of degree k (1 <= k <= 9) covering the plane via the
/// m-th anticanonical multiple:
///   N = m^2 k,  2d = m(3m-1)k,  g - 1 = (3m-2)(3m-1)k / 2,
///   c = (12m^2 - 9m + 3)k - 12.
/// The verdict is always unique for N >= 3 (verified, raises on violation).
family_output del_pezzo(const Int& m, const Int& k);

/// Smooth quadric embedded by the (a,b) ruling classes (a >= b >= 1):
///   N = 2ab,  d = 3ab - a - b,  g - 1 = 9(ab - a - b) + 8,
///   c = 24ab - 18a - 18b + 12.
/// (1,1) is the double plane branched along a smooth conic.
family_output quadric(const Int& a, const Int& b);

/// Surfaces with numerically trivial canonical class, covering via |2L|-type
/// data: N = 2k, d = 3k, g = 9k + 1, c = 24k - 12*chi with chi = 2, 1, 0.
enum class trivial_canonical_kind { k3, enriques, abelian };

/// Requires k >= 2 (N >= 4). The Enriques k=2 and abelian k=3 outputs carry a
/// note describing the known non-equivalent companion cover.
family_output trivial_canonical(const Int& k, trivial_canonical_kind kind);

/// Smooth complete intersection of the given multidegree, generically
/// projected. With s = sum(m_i - 1):
///   N = prod m_i,  2d = s N,  2(g - 1) = s(2s-3) N.
/// For a single degree the Euler number m^3 - 4m^2 + 6m pins the cusp count
/// and a full curve is returned; for two or more degrees only the positivity
/// certificate 3N - 4s > 0 (sufficient for uniqueness) is evaluated.
struct complete_intersection_result {
  std::vector<Int> degrees;
  Int N;
  Int d;
  Int g;
  std::optional<Int> euler;
  std::optional<family_output> curve;  ///< single-degree case only
  Int certificate;                     ///< 3N - 4s
  bool certificate_positive = false;
};

complete_intersection_result complete_intersection(const std::vector<Int>& degrees);

/// Branch curve dual to a nodal plane curve of degree delta and genus g
/// (the degree-delta projection of the dual surface):
///   N = delta,  d = delta + g - 1,  c = 3*delta + 6(g-1).
/// Preconditions delta >= 3 and 0 <= g <= (delta-1)(delta-2)/2.
struct dual_nodal_output {
  family_output out;
  Int source_nodes;  ///< (delta-1)(delta-2)/2 - g, nodes of the source curve
};

dual_nodal_output dual_of_nodal(const Int& delta, const Int& g);

struct dual_nodal_exception {
  Int delta, g;
  curve_invariants curve;
  Int N;
  Rat threshold;
  Int max_competing_degree;
  /// The case's own cover has degree < n_min; the numerical criterion leaves a
  /// degree-n_min competitor open and a geometric argument is needed instead.
  bool needs_external_argument = false;
};

/// Sweeps 3 <= delta <= delta_max, 0 <= g <= (delta-1)(delta-2)/2 and keeps
/// validation-passing curves whose uniqueness inequality fails AND whose
/// competing-degree bound reaches n_min (competitors below n_min cannot
/// contradict uniqueness of covers of degree >= n_min).
std::vector<dual_nodal_exception> enumerate_dual_nodal_exceptions(const Int& delta_max = 7,
                                                                  const Int& n_min = 5);

/// One level of the ample-power scan.
struct ample_power_row {
  Int m;
  Int margin;  ///< m^2 a (6 m^2 a + 3 m b + e) - 4 (9 m^2 a + 6 m b + k)
  bool positive = false;
  bool impossible = false;  ///< the level's branch curve cannot exist
  std::string impossible_reason;
};

struct ample_power_scan {
  Int m0;
  std::vector<ample_power_row> rows;
};

/// Given an ample class L with a = L^2, b = (K,L), k = K^2 and the surface
/// Euler number e, finds the least m0 such that every level m >= m0 (scanned
/// up to the horizon) is certified: positive uniqueness margin, or no branch
/// curve at that level (odd degree, odd 2(g-1), c < 0 or n < 0).
/// Raises no_threshold_found when the horizon level itself is uncertified.
ample_power_scan ample_power_threshold(const Int& a, const Int& b, const Int& k,
                                       const Int& euler, const Int& horizon = 64);

/// Degree/genus/cusp data of the m-th member of the family realizing three
/// distinct generic covers with one branch curve (m >= 5):
///   degree = m(3m+1), g = (3m+1)(3m+2)/2 + 1, c = 3(4m^2 + 3m - 3).
/// Verified to match general_type_mk(m, 1, 1).
struct zariski_triple_data {
  Int degree;
  Int g;
  Int c;
};

zariski_triple_data zariski_triple(const Int& m);

/// Chern-slope admissibility of (chi, K^2) = (x, y) for a minimal surface of
/// general type: 2x - 6 <= y together with the integer form of the slope
/// ceiling, y <= 8x and (8x - y)^3 >= 31104 x^2 (exactly y <= 8(x - c x^(2/3))
/// with c = 9 / 12^(1/3), cubed to stay in integers).
bool persson_admissible(const Int& x, const Int& y);

/// Least p >= 1 with persson_admissible(p, 4p); the double-cover family below
/// needs K^2 = 4*chi, and this is the first chi where that slope is allowed.
Int minimal_persson_p();

/// (K^2, chi) = (4p, p) of the double cover constructed from an abelian
/// surface with a (2p+2, 2)-polarization.
struct double_cover_data {
  Int K2;
  Int p_a;
};

double_cover_data abelian_double_cover(const Int& p);

}  // namespace chisini
