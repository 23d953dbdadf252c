#include "cli.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chisini/error.hpp"
#include "chisini/homsearch.hpp"
#include "chisini/presentation.hpp"
#include "chisini/product_lattice.hpp"
#include "chisini/search.hpp"
#include "record.hpp"

namespace chisini_cli {

namespace {

using chisini::Int;
using chisini::Rat;

Int parse_int(const std::string& text) {
  std::size_t at = (!text.empty() && (text[0] == '+' || text[0] == '-')) ? 1 : 0;
  bool ok = at < text.size();
  for (std::size_t i = at; ok && i < text.size(); ++i) {
    ok = std::isdigit(static_cast<unsigned char>(text[i])) != 0;
  }
  if (!ok) chisini::raise(chisini::fault::parse_error, "'" + text + "' is not an integer");
  return Int(text[0] == '+' ? text.substr(1) : text);
}

/// Option holders for every subcommand; CLI11 binds to these by reference.
struct option_state {
  bool json = false;

  std::string d, g, c, n;           // curve data
  std::string N, N1, N2;            // cover degrees
  std::string m, k, pa, a, b, e;    // family parameters
  std::string delta;                // dual-nodal source degree
  std::string horizon = "64";
  std::string kind = "k3";
  std::vector<std::string> degrees;
  bool exceptions = false;
  std::string k_max = "20", pa_max = "20", m_max = "8";
  std::string delta_max = "7", n_min_dual = "5";
  std::string chi, k2;
  bool minimal_double_cover = false;

  std::string d_min = "1", d_max = "6", g_min = "0", g_max = "3", n_min = "5";
  bool skip_genus_formula = false, skip_cusp_upper = false, skip_cusp_lower = false,
       skip_divisibility = false, skip_dual_nonneg = false;
  bool show_eliminated = false;

  int points = 0;
  std::string file;
  std::uint64_t budget = 100'000'000;
  bool allow_intransitive = false;
  unsigned workers = 0;

  int n1 = 0, n2 = 0;
};

/// Curve from --d/--g/--c and optional --n. With `strict_n`, a supplied node
/// count must satisfy the genus formula (commands that would otherwise echo
/// an impossible tuple without noticing).
chisini::curve_invariants make_curve(const option_state& o, bool strict_n) {
  Int d = parse_int(o.d), g = parse_int(o.g), c = parse_int(o.c);
  if (o.n.empty()) {
    return {d, g, c, chisini::nodes_from_genus(d, g, c)};
  }
  chisini::curve_invariants inv{d, g, c, parse_int(o.n)};
  if (strict_n && !chisini::genus_consistent(inv)) {
    chisini::raise(chisini::fault::invalid_argument,
                   "n = " + inv.n.str() + " violates the genus formula; omit --n to compute it");
  }
  return inv;
}

void add_curve_options(CLI::App* sub, option_state& o, bool with_n = true) {
  sub->add_option("--d", o.d, "half the plane degree (the curve has degree 2d)")->required();
  sub->add_option("--g", o.g, "geometric genus")->required();
  sub->add_option("--c", o.c, "number of cusps")->required();
  if (with_n) sub->add_option("--n", o.n, "number of nodes (computed from the genus formula if omitted)");
}

void add_json_flag(CLI::App* sub, option_state& o) {
  sub->add_flag("--json", o.json, "emit the record as JSON instead of path = value lines");
}

ordered_json word_list(const chisini::marked_presentation& pres,
                       const std::vector<chisini::word>& words) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : words) arr.push_back(chisini::word_string(pres, w));
  return arr;
}

ordered_json pair_list(const chisini::marked_presentation& pres,
                       const std::vector<std::pair<chisini::word, chisini::word>>& pairs) {
  ordered_json arr = ordered_json::array();
  for (const auto& [w1, w2] : pairs) {
    arr.push_back(chisini::word_string(pres, w1) + " , " + chisini::word_string(pres, w2));
  }
  return arr;
}

ordered_json exception_case_json(const chisini::general_type_exception& ex) {
  ordered_json j;
  j["m"] = jint(ex.m);
  j["k"] = jint(ex.k);
  j["chi"] = jint(ex.p_a);
  j["curve"] = curve_json(ex.curve);
  j["N"] = jint(ex.N);
  j["threshold"] = jrat(ex.threshold);
  j["max_competing_degree"] = jint(ex.max_competing_degree);
  return j;
}

class driver {
 public:
  driver(std::ostream& out) : out_(out) {}

  void emit(const option_state& o, const ordered_json& rec) {
    if (o.json) {
      out_ << rec.dump(2) << "\n";
    } else {
      out_ << flatten_record(rec);
    }
  }

 private:
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "exact invariants, uniqueness thresholds and monodromy checks for branch "
      "curves of generic covers of the plane"};
  app.require_subcommand(1);
  option_state o;
  driver drv(out);

  // ---- invariants -------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "invariants", "validate a candidate branch curve and list every necessary condition");
    add_curve_options(sub, o);
    sub->add_option("--N", o.N, "also derive the invariants of a degree-N covering surface");
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::curve_invariants inv = make_curve(o, false);
      ordered_json rec = make_record("invariants");
      rec["curve"] = curve_json(inv);
      rec["validation"] = validation_json(chisini::validate_discriminant_candidate(inv));
      if (!o.N.empty()) {
        rec["surface"] = morphism_json(chisini::complete_morphism_invariants(inv, parse_int(o.N)));
      }
      drv.emit(o, rec);
    });
  }

  // ---- dual --------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand("dual", "degree, cusps and nodes of the dual curve");
    add_curve_options(sub, o);
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::curve_invariants inv = make_curve(o, false);
      ordered_json rec = make_record("dual");
      rec["curve"] = curve_json(inv);
      rec["dual"] = dual_json(chisini::plucker_dual(inv));
      drv.emit(o, rec);
    });
  }

  // ---- chisini ------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "chisini", "decide whether a degree-N generic cover is the unique one with this branch curve");
    add_curve_options(sub, o);
    sub->add_option("--N", o.N, "degree of the cover")->required();
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::curve_invariants inv = make_curve(o, true);
      Int N = parse_int(o.N);
      ordered_json rec = make_record("chisini");
      rec["curve"] = curve_json(inv);
      rec["N"] = jint(N);
      rec["verdict"] = verdict_json(chisini::chisini_check(inv, N));
      ordered_json bounds;
      bounds["hodge"] = jrat(chisini::hodge_degree_bound(inv.d, inv.g));
      bounds["line"] = jint(chisini::line_degree_bound(inv.d));
      rec["degree_bounds"] = std::move(bounds);
      rec["guaranteed_by_degree_genus"] = chisini::degree_genus_guarantee(inv.d, inv.g);
      drv.emit(o, rec);
    });
  }

  // ---- fiber --------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "fiber", "intersection numbers on the fiber product of two covers with one branch curve");
    add_curve_options(sub, o);
    sub->add_option("--N1", o.N1, "degree of the first cover")->required();
    sub->add_option("--N2", o.N2, "degree of the second cover")->required();
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::curve_invariants inv = make_curve(o, true);
      Int N1 = parse_int(o.N1), N2 = parse_int(o.N2);
      chisini::fiber_numbers f = chisini::fiber_product_numbers(inv, N1, N2);
      ordered_json rec = make_record("fiber");
      rec["curve"] = curve_json(inv);
      rec["N1"] = jint(N1);
      rec["N2"] = jint(N2);
      ordered_json nums;
      nums["r_sq"] = jint(f.r_sq);
      nums["c1_sq"] = jint(f.c1_sq);
      nums["c2_sq"] = jint(f.c2_sq);
      nums["r_dot_c"] = jint(f.r_dot_c);
      nums["hodge_det1"] = jint(f.hodge_det1);
      nums["hodge_det2"] = jint(f.hodge_det2);
      rec["numbers"] = std::move(nums);
      rec["pair_excluded"] = f.hodge_det1 > 0 || f.hodge_det2 > 0;
      drv.emit(o, rec);
    });
  }

  // ---- family -------------------------------------------------------------
  {
    CLI::App* fam = app.add_subcommand("family", "branch curves of the built-in surface families");
    fam->require_subcommand(1);

    {
      CLI::App* sub = fam->add_subcommand(
          "general-type", "pluricanonical cover of a minimal surface of general type");
      sub->add_option("-m,--multiple", o.m, "canonical multiple");
      sub->add_option("-k,--k2", o.k, "canonical self-intersection K^2");
      sub->add_option("--chi", o.pa, "holomorphic Euler characteristic");
      sub->add_flag("--exceptions", o.exceptions,
                    "enumerate every parameter triple whose uniqueness inequality fails");
      sub->add_option("--k-max", o.k_max, "K^2 sweep bound for --exceptions");
      sub->add_option("--chi-max", o.pa_max, "chi sweep bound for --exceptions");
      sub->add_option("--m-max", o.m_max, "multiple sweep bound for --exceptions");
      add_json_flag(sub, o);
      sub->callback([&] {
        if (o.exceptions) {
          chisini::general_type_exception_list list = chisini::enumerate_general_type_exceptions(
              parse_int(o.k_max), parse_int(o.pa_max), parse_int(o.m_max));
          ordered_json rec = make_record("family general-type --exceptions");
          rec["k_max"] = jint(parse_int(o.k_max));
          rec["chi_max"] = jint(parse_int(o.pa_max));
          rec["m_max"] = jint(parse_int(o.m_max));
          rec["count"] = list.cases.size();
          ordered_json cases = ordered_json::array();
          for (const auto& ex : list.cases) cases.push_back(exception_case_json(ex));
          rec["cases"] = std::move(cases);
          rec["degree_bound"] = jint(list.degree_bound);
          drv.emit(o, rec);
          return;
        }
        for (const auto& [value, name] :
             {std::pair{&o.m, "-m"}, std::pair{&o.k, "-k"}, std::pair{&o.pa, "--chi"}}) {
          if (value->empty()) throw CLI::RequiredError(name);
        }
        chisini::family_output res =
            chisini::general_type_mk(parse_int(o.m), parse_int(o.k), parse_int(o.pa));
        ordered_json rec = make_record("family general-type");
        rec["m"] = jint(parse_int(o.m));
        rec["k"] = jint(parse_int(o.k));
        rec["chi"] = jint(parse_int(o.pa));
        rec.update(family_json(res));
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "del-pezzo", "plurianticanonical cover of a del Pezzo surface of degree 1..9");
      sub->add_option("-m,--multiple", o.m, "anticanonical multiple")->required();
      sub->add_option("-k,--degree", o.k, "degree of the del Pezzo surface")->required();
      add_json_flag(sub, o);
      sub->callback([&] {
        chisini::family_output res = chisini::del_pezzo(parse_int(o.m), parse_int(o.k));
        ordered_json rec = make_record("family del-pezzo");
        rec["m"] = jint(parse_int(o.m));
        rec["k"] = jint(parse_int(o.k));
        rec.update(family_json(res));
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "quadric", "smooth quadric embedded by the (a,b) class of its two rulings");
      sub->add_option("-a", o.a, "multiple of the first ruling")->required();
      sub->add_option("-b", o.b, "multiple of the second ruling")->required();
      add_json_flag(sub, o);
      sub->callback([&] {
        chisini::family_output res = chisini::quadric(parse_int(o.a), parse_int(o.b));
        ordered_json rec = make_record("family quadric");
        rec["a"] = jint(parse_int(o.a));
        rec["b"] = jint(parse_int(o.b));
        rec.update(family_json(res));
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "trivial-canonical", "cover of a surface with numerically trivial canonical class");
      sub->add_option("-k,--half-degree", o.k, "half the cover degree (N = 2k)")->required();
      sub->add_option("--class", o.kind, "surface class")
          ->check(CLI::IsMember({"k3", "enriques", "abelian"}));
      add_json_flag(sub, o);
      sub->callback([&] {
        chisini::trivial_canonical_kind kind = chisini::trivial_canonical_kind::k3;
        if (o.kind == "enriques") kind = chisini::trivial_canonical_kind::enriques;
        if (o.kind == "abelian") kind = chisini::trivial_canonical_kind::abelian;
        chisini::family_output res = chisini::trivial_canonical(parse_int(o.k), kind);
        ordered_json rec = make_record("family trivial-canonical");
        rec["k"] = jint(parse_int(o.k));
        rec["class"] = o.kind;
        rec.update(family_json(res));
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "complete-intersection", "generic projection of a smooth complete intersection");
      sub->add_option("--degrees", o.degrees, "multidegree (one or more integers >= 2)")
          ->required()
          ->expected(-1);
      add_json_flag(sub, o);
      sub->callback([&] {
        std::vector<Int> degrees;
        for (const auto& s : o.degrees) degrees.push_back(parse_int(s));
        chisini::complete_intersection_result res = chisini::complete_intersection(degrees);
        ordered_json rec = make_record("family complete-intersection");
        ordered_json degs = ordered_json::array();
        for (const auto& v : res.degrees) degs.push_back(jint(v));
        rec["degrees"] = std::move(degs);
        rec["N"] = jint(res.N);
        rec["d"] = jint(res.d);
        rec["g"] = jint(res.g);
        if (res.euler) rec["euler"] = jint(*res.euler);
        rec["certificate"] = jint(res.certificate);
        rec["certificate_positive"] = res.certificate_positive;
        if (res.curve) rec["curve_data"] = family_json(*res.curve);
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "dual-nodal", "branch curve dual to a nodal plane curve (projected dual surface)");
      sub->add_option("--delta", o.delta, "degree of the nodal source curve");
      sub->add_option("--g", o.g, "genus of the source curve");
      sub->add_flag("--exceptions", o.exceptions,
                    "enumerate the cases whose uniqueness inequality fails");
      sub->add_option("--delta-max", o.delta_max, "source degree bound for --exceptions");
      sub->add_option("--n-min", o.n_min_dual, "competing-degree floor for --exceptions");
      add_json_flag(sub, o);
      sub->callback([&] {
        if (o.exceptions) {
          auto list = chisini::enumerate_dual_nodal_exceptions(parse_int(o.delta_max),
                                                               parse_int(o.n_min_dual));
          ordered_json rec = make_record("family dual-nodal --exceptions");
          rec["delta_max"] = jint(parse_int(o.delta_max));
          rec["n_min"] = jint(parse_int(o.n_min_dual));
          rec["count"] = list.size();
          ordered_json cases = ordered_json::array();
          for (const auto& ex : list) {
            ordered_json j;
            j["delta"] = jint(ex.delta);
            j["g"] = jint(ex.g);
            j["curve"] = curve_json(ex.curve);
            j["N"] = jint(ex.N);
            j["threshold"] = jrat(ex.threshold);
            j["max_competing_degree"] = jint(ex.max_competing_degree);
            j["needs_external_argument"] = ex.needs_external_argument;
            cases.push_back(std::move(j));
          }
          rec["cases"] = std::move(cases);
          drv.emit(o, rec);
          return;
        }
        if (o.delta.empty()) throw CLI::RequiredError("--delta");
        if (o.g.empty()) throw CLI::RequiredError("--g");
        chisini::dual_nodal_output res = chisini::dual_of_nodal(parse_int(o.delta), parse_int(o.g));
        ordered_json rec = make_record("family dual-nodal");
        rec["delta"] = jint(parse_int(o.delta));
        rec["g"] = jint(parse_int(o.g));
        rec["source_nodes"] = jint(res.source_nodes);
        rec.update(family_json(res.out));
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "ample-power", "least power of an ample class from which uniqueness is certified");
      sub->add_option("-a,--self-intersection", o.a, "L^2")->required();
      sub->add_option("-b,--canonical-product", o.b, "(K, L)")->required();
      sub->add_option("-k,--k2", o.k, "K^2")->required();
      sub->add_option("-e,--euler", o.e, "topological Euler number")->required();
      sub->add_option("--horizon", o.horizon, "largest power scanned");
      add_json_flag(sub, o);
      sub->callback([&] {
        chisini::ample_power_scan scan = chisini::ample_power_threshold(
            parse_int(o.a), parse_int(o.b), parse_int(o.k), parse_int(o.e), parse_int(o.horizon));
        ordered_json rec = make_record("family ample-power");
        rec["a"] = jint(parse_int(o.a));
        rec["b"] = jint(parse_int(o.b));
        rec["k2"] = jint(parse_int(o.k));
        rec["euler"] = jint(parse_int(o.e));
        rec["m0"] = jint(scan.m0);
        ordered_json rows = ordered_json::array();
        for (const auto& row : scan.rows) {
          ordered_json j;
          j["m"] = jint(row.m);
          j["margin"] = jint(row.margin);
          j["positive"] = row.positive;
          j["impossible"] = row.impossible;
          if (row.impossible) j["reason"] = row.impossible_reason;
          rows.push_back(std::move(j));
        }
        rec["rows"] = std::move(rows);
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "zariski-triple", "branch curve carrying three pairwise non-equivalent generic covers");
      sub->add_option("-m,--multiple", o.m, "family parameter (m >= 5)")->required();
      add_json_flag(sub, o);
      sub->callback([&] {
        chisini::zariski_triple_data z = chisini::zariski_triple(parse_int(o.m));
        ordered_json rec = make_record("family zariski-triple");
        rec["m"] = jint(parse_int(o.m));
        rec["plane_degree"] = jint(z.degree);
        rec["g"] = jint(z.g);
        rec["c"] = jint(z.c);
        rec["matches_canonical_family"] = true;  // verified by construction
        drv.emit(o, rec);
      });
    }

    {
      CLI::App* sub = fam->add_subcommand(
          "geography", "Chern-slope admissibility of (chi, K^2) for minimal general type");
      sub->add_option("--chi", o.chi, "holomorphic Euler characteristic");
      sub->add_option("--k2", o.k2, "canonical self-intersection");
      sub->add_flag("--minimal-double-cover", o.minimal_double_cover,
                    "least chi admitting the K^2 = 4 chi double-cover construction");
      add_json_flag(sub, o);
      sub->callback([&] {
        ordered_json rec = make_record("family geography");
        if (o.minimal_double_cover) {
          Int p = chisini::minimal_persson_p();
          chisini::double_cover_data dc = chisini::abelian_double_cover(p);
          rec["minimal_chi"] = jint(p);
          ordered_json cover;
          cover["K2"] = jint(dc.K2);
          cover["chi"] = jint(dc.p_a);
          rec["double_cover"] = std::move(cover);
          rec["admissible"] = chisini::persson_admissible(p, dc.K2);
          drv.emit(o, rec);
          return;
        }
        if (o.chi.empty()) throw CLI::RequiredError("--chi");
        if (o.k2.empty()) throw CLI::RequiredError("--k2");
        rec["chi"] = jint(parse_int(o.chi));
        rec["k2"] = jint(parse_int(o.k2));
        rec["admissible"] = chisini::persson_admissible(parse_int(o.chi), parse_int(o.k2));
        drv.emit(o, rec);
      });
    }
  }

  // ---- search ---------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "search", "exhaustive scan for branch curves that could carry a second cover");
    sub->add_option("--d-min", o.d_min, "smallest half-degree");
    sub->add_option("--d-max", o.d_max, "largest half-degree");
    sub->add_option("--g-min", o.g_min, "smallest genus");
    sub->add_option("--g-max", o.g_max, "largest genus");
    sub->add_option("--n-min", o.n_min, "competing-degree floor");
    sub->add_flag("--skip-genus-formula", o.skip_genus_formula, "drop the n >= 0 constraint");
    sub->add_flag("--skip-cusp-upper", o.skip_cusp_upper, "drop the cusp upper bounds");
    sub->add_flag("--skip-cusp-lower", o.skip_cusp_lower, "drop the cusp lower bound");
    sub->add_flag("--skip-divisibility", o.skip_divisibility, "drop c mod 3 and n mod 4");
    sub->add_flag("--skip-dual-nonneg", o.skip_dual_nonneg, "drop the dual nonnegativity");
    sub->add_flag("--show-eliminated", o.show_eliminated, "list each eliminated tuple");
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::search_profile profile;
      profile.d_min = parse_int(o.d_min);
      profile.d_max = parse_int(o.d_max);
      profile.g_min = parse_int(o.g_min);
      profile.g_max = parse_int(o.g_max);
      profile.n_min = parse_int(o.n_min);
      profile.require_genus_formula = !o.skip_genus_formula;
      profile.require_cusp_upper = !o.skip_cusp_upper;
      profile.require_cusp_lower = !o.skip_cusp_lower;
      profile.require_divisibility = !o.skip_divisibility;
      profile.require_dual_nonneg = !o.skip_dual_nonneg;
      chisini::search_result res = chisini::find_potential_counterexamples(profile);

      ordered_json rec = make_record("search");
      ordered_json prof;
      prof["d_min"] = jint(profile.d_min);
      prof["d_max"] = jint(profile.d_max);
      prof["g_min"] = jint(profile.g_min);
      prof["g_max"] = jint(profile.g_max);
      prof["n_min"] = jint(profile.n_min);
      prof["genus_formula"] = profile.require_genus_formula;
      prof["cusp_upper"] = profile.require_cusp_upper;
      prof["cusp_lower"] = profile.require_cusp_lower;
      prof["divisibility"] = profile.require_divisibility;
      prof["dual_nonneg"] = profile.require_dual_nonneg;
      rec["profile"] = std::move(prof);

      rec["survivor_count"] = res.survivors.size();
      ordered_json survivors = ordered_json::array();
      for (const auto& s : res.survivors) {
        ordered_json j;
        j["curve"] = curve_json(s.curve);
        j["N_lo"] = jint(s.N_lo);
        j["N_hi"] = jint(s.N_hi);
        j["threshold"] = jrat(s.threshold);
        survivors.push_back(std::move(j));
      }
      rec["survivors"] = std::move(survivors);

      ordered_json counts;
      for (const char* reason : {"genus_formula", "cusp_upper", "cusp_lower", "divisibility",
                                 "dual_nonneg", "degree_bounds"}) {
        std::size_t count = 0;
        for (const auto& el : res.eliminated) {
          if (el.reason == reason) ++count;
        }
        counts[reason] = count;
      }
      counts["total"] = res.eliminated.size();
      rec["eliminated"] = std::move(counts);
      if (o.show_eliminated) {
        ordered_json listed = ordered_json::array();
        for (const auto& el : res.eliminated) {
          ordered_json j;
          j["d"] = jint(el.d);
          j["g"] = jint(el.g);
          j["c"] = jint(el.c);
          j["reason"] = el.reason;
          listed.push_back(std::move(j));
        }
        rec["eliminations"] = std::move(listed);
      }
      drv.emit(o, rec);
    });
  }

  // ---- canonical --------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "canonical", "solve the canonical-multiple shape equations for a curve");
    add_curve_options(sub, o);
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::curve_invariants inv = make_curve(o, true);
      chisini::canonical_check res = chisini::canonical_conditions(inv);
      ordered_json rec = make_record("canonical");
      rec["curve"] = curve_json(inv);
      rec["m"] = jrat(res.m);
      rec["k"] = jrat(res.k);
      rec["N"] = jrat(res.N);
      rec["chi"] = jrat(res.p_a);
      rec["all_integral"] = res.all_integral;
      if (res.all_integral) {
        ordered_json dims = ordered_json::array();
        for (const auto& v : res.h0_dims) dims.push_back(jint(v));
        rec["h0_dims"] = std::move(dims);
        rec["double_point_identity"] = chisini::double_point_degree_check(
            inv, chisini::rat_to_int(res.m), chisini::rat_to_int(res.k));
      }
      drv.emit(o, rec);
    });
  }

  // ---- homcount -----------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "homcount", "count monodromy classes of a marked presentation into a symmetric group");
    sub->add_option("--points", o.points, "number of sheets (symmetric group degree)")
        ->required()
        ->check(CLI::Range(1, 8));
    sub->add_option("--file", o.file, "presentation file (built-in cusp model if omitted)");
    sub->add_option("--budget", o.budget, "cap on raw assignments scanned");
    sub->add_flag("--allow-intransitive", o.allow_intransitive,
                  "keep classes whose image is not the full symmetric group");
    sub->add_option("--workers", o.workers, "parallel workers (0 = hardware)");
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::marked_presentation pres = o.file.empty()
                                              ? chisini::marked_presentation::braid3()
                                              : chisini::load_presentation(o.file);
      chisini::admissible_options opts;
      opts.budget = o.budget;
      opts.require_transitive = !o.allow_intransitive;
      opts.workers = o.workers;
      std::vector<chisini::hom_class> classes = chisini::enumerate_admissible(pres, o.points, opts);

      ordered_json rec = make_record("homcount");
      rec["points"] = o.points;
      rec["source"] = o.file.empty() ? "builtin:braid3" : o.file;
      ordered_json pj;
      pj["generators"] = pres.generators;
      pj["relators"] = word_list(pres, pres.relators);
      pj["geometric"] = word_list(pres, pres.geometric);
      pj["cusps"] = pair_list(pres, pres.cusps);
      pj["nodes"] = pair_list(pres, pres.nodes);
      rec["presentation"] = std::move(pj);
      rec["require_transitive"] = opts.require_transitive;
      rec["class_count"] = classes.size();
      ordered_json arr = ordered_json::array();
      for (const auto& cls : classes) {
        ordered_json j;
        ordered_json cycles = ordered_json::array();
        ordered_json lines = ordered_json::array();
        for (const auto& p : cls.images) {
          cycles.push_back(p.cycle_string());
          lines.push_back(p.one_line());
        }
        j["images"] = std::move(cycles);
        j["one_line"] = std::move(lines);
        arr.push_back(std::move(j));
      }
      rec["classes"] = std::move(arr);
      drv.emit(o, rec);
    });
  }

  // ---- orbitcheck ------------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "orbitcheck",
        "verify the orbit dichotomy for subgroups of a product of two symmetric groups");
    sub->add_option("--n1", o.n1, "points of the first factor")->required()->check(CLI::Range(2, 4));
    sub->add_option("--n2", o.n2, "points of the second factor")->required()->check(CLI::Range(2, 4));
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::product_orbit_report rep = chisini::verify_product_orbit_dichotomy(o.n1, o.n2);
      ordered_json rec = make_record("orbitcheck");
      rec["n1"] = rep.n1;
      rec["n2"] = rep.n2;
      rec["subgroups_containing_marker"] = rep.subgroups_containing_marker;
      rec["qualifying"] = rep.qualifying;
      rec["violations"] = rep.violations;
      ordered_json arr = ordered_json::array();
      for (const auto& info : rep.entries) {
        ordered_json j;
        j["order"] = info.order;
        j["orbit_of_origin"] = info.orbit_of_origin;
        j["orbit_sizes"] = info.orbit_sizes;
        j["diagonal_conjugate"] = info.diagonal_conjugate;
        arr.push_back(std::move(j));
      }
      rec["entries"] = std::move(arr);
      drv.emit(o, rec);
    });
  }

  // ---- localmodels --------------------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "localmodels", "built-in checks of the cusp local monodromy model");
    add_json_flag(sub, o);
    sub->callback([&] {
      chisini::local_model_report rep = chisini::local_model_suite();
      ordered_json rec = make_record("localmodels");
      rec["all_passed"] = rep.all_passed();
      ordered_json arr = ordered_json::array();
      for (const auto& item : rep.items) {
        ordered_json j;
        j["name"] = item.name;
        j["passed"] = item.passed;
        j["detail"] = item.detail;
        arr.push_back(std::move(j));
      }
      rec["items"] = std::move(arr);
      drv.emit(o, rec);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const chisini::domain_error& e) {
    err << "error: " << chisini::fault_name(e.kind()) << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace chisini_cli
