#include "chisini/invariants.hpp"

#include <sstream>

#include "chisini/error.hpp"

namespace chisini {

Int genus_formula_total(const Int& d) { return (2 * d - 1) * (d - 1); }

bool genus_consistent(const curve_invariants& inv) {
  return inv.g + inv.c + inv.n == genus_formula_total(inv.d);
}

Int nodes_from_genus(const Int& d, const Int& g, const Int& c) {
  Int n = genus_formula_total(d) - g - c;
  if (n < 0) {
    raise(fault::negative_nodes, "(2d-1)(d-1) - g - c = " + n.str() + " for d=" + d.str() +
                                     " g=" + g.str() + " c=" + c.str());
  }
  return n;
}

dual_invariants dual_of_plane_curve(const Int& deg, const Int& g, const Int& cusps,
                                    const Int& nodes) {
  dual_invariants dual;
  dual.delta = 2 * deg + 2 * g - 2 - cusps;
  dual.gamma = 3 * deg + 6 * g - 6 - 2 * cusps;
  Int twice_nu = (dual.delta - 1) * (dual.delta - 2) - 2 * g - 2 * dual.gamma;
  // product of consecutive integers is even, so nu is integral whenever the
  // inputs are
  dual.nu = twice_nu / 2;

  Int delta_raw = deg * (deg - 1) - 2 * nodes - 3 * cusps;
  Int deg_back = dual.delta * (dual.delta - 1) - 2 * dual.nu - 3 * dual.gamma;
  if (2 * dual.nu != twice_nu || delta_raw != dual.delta || deg_back != deg) {
    raise(fault::inconsistent_dual,
          "linear dual degree " + dual.delta.str() + " vs quadratic " + delta_raw.str() +
              " (degree " + deg.str() + ", check the genus formula)");
  }
  return dual;
}

dual_invariants plucker_dual(const curve_invariants& inv) {
  return dual_of_plane_curve(2 * inv.d, inv.g, inv.c, inv.n);
}

Rat hodge_degree_bound(const Int& d, const Int& g) {
  Int den = 3 * d + g - 1;
  if (den <= 0) raise(fault::degenerate_denominator, "3d + g - 1 = " + den.str());
  return Rat(4 * d * d, den);
}

Int line_degree_bound(const Int& d) { return d + 1; }

morphism_invariants complete_morphism_invariants(const curve_invariants& inv, const Int& N) {
  Int chi_num = 12 * N + 3 * inv.g - 3 - 9 * inv.d - inv.c;
  if (chi_num % 12 != 0) {
    raise(fault::non_integral_chi, "12 does not divide 12N + 3g - 3 - 9d - c = " + chi_num.str());
  }
  morphism_invariants m;
  m.N = N;
  m.gE = inv.d - N + 1;
  if (m.gE < 0) {
    raise(fault::genus_violation, "generic-line preimage genus d - N + 1 = " + m.gE.str());
  }
  m.K2 = 9 * N - 9 * inv.d + inv.g - 1;
  m.euler = 3 * N + 2 * (inv.g - 1) - inv.c;
  m.p_a = chi_num / 12;
  m.R2 = 3 * inv.d + inv.g - 1;
  if (12 * m.p_a != m.K2 + m.euler) {
    raise(fault::inconsistent_dual, "surface identity 12*chi = K2 + e violated");  // unreachable
  }
  return m;
}

bool validation_report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed && !c.waived) return false;
  return true;
}

const check_result* validation_report::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

check_result make_check(std::string name, bool passed, std::string detail, bool waived = false) {
  return check_result{std::move(name), passed, waived, std::move(detail)};
}

}  // namespace

validation_report validate_discriminant_candidate(const curve_invariants& inv) {
  validation_report rep;
  rep.smooth_double_plane = (inv.c == 0 && inv.n == 0);

  rep.checks.push_back(make_check("fields_nonnegative",
                                  inv.d >= 1 && inv.g >= 0 && inv.c >= 0 && inv.n >= 0,
                                  "d >= 1, g >= 0, c >= 0, n >= 0"));
  {
    Int total = genus_formula_total(inv.d);
    Int lhs = inv.g + inv.c + inv.n;
    rep.checks.push_back(make_check("genus_formula", lhs == total,
                                    "g + c + n = " + lhs.str() + ", (2d-1)(d-1) = " + total.str()));
  }
  {
    Int bound = 4 * inv.d + 2 * inv.g - 2;
    rep.checks.push_back(
        make_check("cusp_upper_delta", inv.c <= bound, "c <= 4d + 2g - 2 = " + bound.str()));
  }
  {
    Int bound = 3 * inv.d + 3 * inv.g - 3;
    rep.checks.push_back(
        make_check("cusp_upper_gamma", inv.c <= bound, "c <= 3d + 3g - 3 = " + bound.str()));
  }
  {
    Int lhs = 3 * inv.d + inv.g - 1;
    bool ok = lhs <= 2 * inv.c;
    // a double plane branched along a smooth curve has abelian monodromy and
    // the cusp lower bound does not apply
    rep.checks.push_back(make_check("cusp_lower", ok, "3d + g - 1 = " + lhs.str() + " <= 2c",
                                    !ok && rep.smooth_double_plane));
  }
  rep.checks.push_back(make_check("cusps_mod_3", inv.c % 3 == 0, "c = " + inv.c.str()));
  rep.checks.push_back(make_check("nodes_mod_4", inv.n % 4 == 0, "n = " + inv.n.str()));
  {
    bool ok = false;
    std::string detail;
    if (genus_consistent(inv)) {
      dual_invariants dual = plucker_dual(inv);
      ok = dual.delta >= 1 && dual.gamma >= 0 && dual.nu >= 0;
      detail = "delta=" + dual.delta.str() + " gamma=" + dual.gamma.str() + " nu=" + dual.nu.str();
    } else {
      detail = "dual undefined: genus formula fails";
    }
    rep.checks.push_back(make_check("dual_nonnegative", ok, std::move(detail)));
  }
  return rep;
}

}  // namespace chisini
