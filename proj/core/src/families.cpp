#include "chisini/families.hpp"

#include <algorithm>

#include "chisini/error.hpp"

namespace chisini {

namespace {

void need(bool cond, const std::string& what) {
  if (!cond) raise(fault::invalid_argument, what);
}

curve_invariants curve_from(const Int& d, const Int& g, const Int& c) {
  // n may raise negative_nodes; c may be negative for parameters admitting no
  // surface -- validation reports that downstream
  return curve_invariants{d, g, c, nodes_from_genus(d, g, c)};
}

}  // namespace

family_output general_type_mk(const Int& m, const Int& k, const Int& p_a) {
  need(m >= 1 && k >= 1 && p_a >= 1, "need m, k, p_a >= 1");
  Int N = m * m * k;
  need(N >= 3, "cover degree m^2 k = " + N.str() + " < 3");
  Int two_d = m * (3 * m + 1) * k;           // consecutive-parity product, even
  Int two_g2 = (3 * m + 2) * (3 * m + 1) * k;  // even likewise
  Int d = two_d / 2;
  Int g = two_g2 / 2 + 1;
  Int c = (12 * m * m + 9 * m + 3) * k - 12 * p_a;
  family_output out;
  out.curve = curve_from(d, g, c);
  out.N = N;
  out.verdict = chisini_check(out.curve, N);
  return out;
}

general_type_exception_list enumerate_general_type_exceptions(const Int& k_max, const Int& pa_max,
                                                              const Int& m_max) {
  general_type_exception_list result;
  result.degree_bound = 0;
  for (Int m = 1; m <= m_max; ++m) {
    for (Int k = 1; k <= k_max; ++k) {
      if (m * m * k < 3) continue;
      for (Int p_a = 1; p_a <= pa_max; ++p_a) {
        family_output fam;
        try {
          fam = general_type_mk(m, k, p_a);
        } catch (const domain_error&) {
          continue;  // curve does not exist at these parameters
        }
        if (!validate_discriminant_candidate(fam.curve).all_passed()) continue;
        if (fam.verdict->unique) continue;
        result.cases.push_back({m, k, p_a, fam.curve, fam.N, fam.verdict->threshold,
                                fam.verdict->max_competing_degree});
        result.degree_bound = std::max(result.degree_bound, fam.verdict->max_competing_degree);
      }
    }
  }
  return result;
}

family_output del_pezzo(const Int& m, const Int& k) {
  need(m >= 1, "need m >= 1");
  need(k >= 1 && k <= 9, "del Pezzo degree k must lie in 1..9");
  Int N = m * m * k;
  need(N >= 3, "cover degree m^2 k = " + N.str() + " < 3");
  Int d = m * (3 * m - 1) * k / 2;
  Int g = (3 * m - 2) * (3 * m - 1) * k / 2 + 1;
  Int c = (12 * m * m - 9 * m + 3) * k - 12;
  family_output out;
  out.curve = curve_from(d, g, c);
  out.N = N;
  out.verdict = chisini_check(out.curve, N);
  if (!out.verdict->unique) {
    raise(fault::invalid_argument, "anticanonical-multiple cover unexpectedly non-unique");
  }
  return out;
}

family_output quadric(const Int& a, const Int& b) {
  need(b >= 1 && a >= b, "need a >= b >= 1");
  Int N = 2 * a * b;
  Int d = 3 * a * b - a - b;
  Int g = 9 * (a * b - a - b) + 9;
  Int c = 24 * a * b - 18 * a - 18 * b + 12;
  family_output out;
  out.curve = curve_from(d, g, c);
  out.N = N;
  out.verdict = chisini_check(out.curve, N);
  if (a == 1 && b == 1) {
    out.smooth_double_plane = true;
    out.notes.push_back("double plane branched along a smooth conic");
  } else if (!out.verdict->unique) {
    raise(fault::invalid_argument, "quadric cover unexpectedly non-unique");
  }
  return out;
}

family_output trivial_canonical(const Int& k, trivial_canonical_kind kind) {
  need(k >= 2, "need k >= 2 (cover degree 2k >= 4)");
  Int chi = 0;
  switch (kind) {
    case trivial_canonical_kind::k3: chi = 2; break;
    case trivial_canonical_kind::enriques: chi = 1; break;
    case trivial_canonical_kind::abelian: chi = 0; break;
  }
  Int N = 2 * k;
  family_output out;
  out.curve = curve_from(3 * k, 9 * k + 1, 24 * k - 12 * chi);
  out.N = N;
  out.verdict = chisini_check(out.curve, N);
  if (kind == trivial_canonical_kind::enriques && k == 2) {
    out.notes.push_back(
        "degree-3 companion: composing the monodromy with the quotient of the "
        "degree-4 symmetric group by the Klein four-group yields a second, "
        "non-equivalent cover of degree 3 with the same branch curve");
  }
  if (kind == trivial_canonical_kind::abelian && k == 3) {
    out.notes.push_back(
        "threshold is attained: a non-equivalent cover of degree <= 6 is not "
        "excluded by the numerical criterion");
  }
  return out;
}

complete_intersection_result complete_intersection(const std::vector<Int>& degrees) {
  need(!degrees.empty(), "need at least one degree");
  complete_intersection_result res;
  res.degrees = degrees;
  Int N = 1, s = 0;
  for (const Int& mi : degrees) {
    need(mi >= 2, "each degree must be >= 2");
    N *= mi;
    s += mi - 1;
  }
  res.N = N;
  res.d = s * N / 2;                    // sN even: odd N forces even s
  res.g = s * (2 * s - 3) * N / 2 + 1;  // same parity argument
  res.certificate = 3 * N - 4 * s;
  res.certificate_positive = res.certificate > 0;
  if (degrees.size() == 1) {
    const Int& m = degrees.front();
    res.euler = m * m * m - 4 * m * m + 6 * m;
    family_output out;
    out.curve = curve_from(res.d, res.g, 3 * N + 2 * (res.g - 1) - *res.euler);
    out.N = N;
    out.verdict = chisini_check(out.curve, N);
    out.smooth_double_plane = (m == 2);
    res.curve = std::move(out);
  }
  return res;
}

dual_nodal_output dual_of_nodal(const Int& delta, const Int& g) {
  need(delta >= 3, "need source degree delta >= 3");
  Int nu_max = (delta - 1) * (delta - 2) / 2;
  need(g >= 0 && g <= nu_max, "genus must lie in 0..(delta-1)(delta-2)/2");
  dual_nodal_output res;
  res.source_nodes = nu_max - g;
  res.out.curve = curve_from(delta + g - 1, g, 3 * delta + 6 * (g - 1));
  res.out.N = delta;
  res.out.verdict = chisini_check(res.out.curve, delta);
  return res;
}

std::vector<dual_nodal_exception> enumerate_dual_nodal_exceptions(const Int& delta_max,
                                                                  const Int& n_min) {
  std::vector<dual_nodal_exception> out;
  for (Int delta = 3; delta <= delta_max; ++delta) {
    Int g_max = (delta - 1) * (delta - 2) / 2;
    for (Int g = 0; g <= g_max; ++g) {
      dual_nodal_output res = dual_of_nodal(delta, g);
      if (!validate_discriminant_candidate(res.out.curve).all_passed()) continue;
      const chisini_verdict& v = *res.out.verdict;
      if (v.unique) continue;
      // competitors are capped by floor(threshold); below n_min they cannot
      // touch uniqueness of covers of degree >= n_min
      if (v.max_competing_degree < n_min) continue;
      out.push_back({delta, g, res.out.curve, delta, v.threshold, v.max_competing_degree,
                     /*needs_external_argument=*/delta < n_min});
    }
  }
  return out;
}

namespace {

// branch-curve existence test for one level of the ample-power scan; returns
// an empty string when a curve with these numbers could exist
std::string level_impossibility(const Int& a, const Int& b, const Int& k, const Int& euler,
                                const Int& m) {
  Int deg = m * (3 * m * a + b);
  if (deg <= 0) return "branch degree <= 0";
  if (deg % 2 != 0) return "branch degree odd";
  Int two_g2 = 9 * m * m * a + 9 * m * b + 2 * k;  // 2(g-1)
  if (two_g2 % 2 != 0) return "2(g-1) odd";
  Int g = two_g2 / 2 + 1;
  if (g < 0) return "genus negative";
  Int c = 12 * m * m * a + 9 * m * b + 2 * k - euler;
  if (c < 0) return "cusp count negative";
  Int d = deg / 2;
  if (genus_formula_total(d) - g - c < 0) return "node count negative";
  return {};
}

}  // namespace

ample_power_scan ample_power_threshold(const Int& a, const Int& b, const Int& k, const Int& euler,
                                       const Int& horizon) {
  need(a >= 1, "need L^2 = a >= 1 for an ample class");
  need(horizon >= 1, "need horizon >= 1");
  ample_power_scan scan;
  scan.rows.reserve(static_cast<std::size_t>(horizon));
  for (Int m = 1; m <= horizon; ++m) {
    ample_power_row row;
    row.m = m;
    row.margin =
        m * m * a * (6 * m * m * a + 3 * m * b + euler) - 4 * (9 * m * m * a + 6 * m * b + k);
    row.positive = row.margin > 0;
    row.impossible_reason = level_impossibility(a, b, k, euler, m);
    row.impossible = !row.impossible_reason.empty();
    scan.rows.push_back(std::move(row));
  }
  Int m0 = 0;
  for (auto it = scan.rows.rbegin(); it != scan.rows.rend(); ++it) {
    if (!(it->positive || it->impossible)) break;
    m0 = it->m;
  }
  if (m0 == 0 || !(scan.rows.back().positive || scan.rows.back().impossible)) {
    raise(fault::no_threshold_found, "no certified tail within horizon " + horizon.str());
  }
  scan.m0 = m0;
  return scan;
}

zariski_triple_data zariski_triple(const Int& m) {
  need(m >= 5, "need m >= 5");
  zariski_triple_data z;
  z.degree = m * (3 * m + 1);
  z.g = (3 * m + 1) * (3 * m + 2) / 2 + 1;
  z.c = 3 * (4 * m * m + 3 * m - 3);
  family_output ref = general_type_mk(m, 1, 1);
  if (z.degree != 2 * ref.curve.d || z.g != ref.curve.g || z.c != ref.curve.c) {
    raise(fault::invalid_argument, "triple-family data disagrees with the canonical-multiple family");
  }
  return z;
}

bool persson_admissible(const Int& x, const Int& y) {
  if (x < 1) return false;
  if (2 * x - 6 > y) return false;
  Int slack = 8 * x - y;
  if (slack < 0) return false;
  return slack * slack * slack >= 31104 * x * x;
}

Int minimal_persson_p() {
  // 64 p^3 >= 31104 p^2 <=> p >= 486; scan anyway so the oracle stays honest
  for (Int p = 1;; ++p) {
    if (persson_admissible(p, 4 * p)) return p;
  }
}

double_cover_data abelian_double_cover(const Int& p) {
  need(p >= 1, "need p >= 1");
  return double_cover_data{4 * p, p};
}

}  // namespace chisini
