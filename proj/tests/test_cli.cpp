#include "doctest.h"

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli.hpp"
#include "record.hpp"

using chisini_cli::ordered_json;

namespace {

struct cli_run {
  int code = -1;
  std::string out;
  std::string err;
};

cli_run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"chisini"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  cli_run r;
  r.code = chisini_cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("invariants command prints the flattened record") {
  cli_run r = run({"invariants", "--d", "10", "--g", "51", "--c", "108"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  CHECK(contains(r.out, "schema_version = 1"));
  CHECK(contains(r.out, "command = invariants"));
  CHECK(contains(r.out, "curve.plane_degree = 20"));
  CHECK(contains(r.out, "curve.n = 12"));
  CHECK(contains(r.out, "validation.all_passed = true"));
  CHECK(contains(r.out, "validation.checks[1].name = genus_formula"));
  CHECK(contains(r.out, "validation.checks[7].detail = delta=32 gamma=144 nu=270"));
}

TEST_CASE("JSON mode carries the same payload as the text mode") {
  for (auto args : {std::vector<const char*>{"chisini", "invariants", "--d", "10", "--g", "51",
                                             "--c", "108", "--N", "5"},
                    std::vector<const char*>{"chisini", "chisini", "--d", "9", "--g", "28",
                                             "--c", "72", "--N", "6"},
                    std::vector<const char*>{"chisini", "search"},
                    std::vector<const char*>{"chisini", "family", "general-type",
                                             "--exceptions"},
                    std::vector<const char*>{"chisini", "localmodels"}}) {
    std::vector<const char*> text_args = args;
    std::vector<const char*> json_args = args;
    json_args.push_back("--json");
    std::ostringstream to, te, jo, je;
    int tc = chisini_cli::run_cli(static_cast<int>(text_args.size()), text_args.data(), to, te);
    int jc = chisini_cli::run_cli(static_cast<int>(json_args.size()), json_args.data(), jo, je);
    REQUIRE(tc == 0);
    REQUIRE(jc == 0);
    ordered_json parsed = ordered_json::parse(jo.str());
    CHECK(to.str() == chisini_cli::flatten_record(parsed));
  }
}

TEST_CASE("repeated runs are byte-identical") {
  cli_run a = run({"search", "--show-eliminated", "--json"});
  cli_run b = run({"search", "--show-eliminated", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("uniqueness verdict for the quintic-threshold curve") {
  cli_run r = run({"chisini", "--d", "10", "--g", "51", "--c", "108", "--N", "5"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "verdict.threshold = 80/13"));
  CHECK(contains(r.out, "verdict.unique = false"));
  CHECK(contains(r.out, "verdict.max_competing_degree = 6"));
  CHECK(contains(r.out, "degree_bounds.hodge = 5"));
  CHECK(contains(r.out, "degree_bounds.line = 11"));
  CHECK(contains(r.out, "guaranteed_by_degree_genus = false"));
}

TEST_CASE("search record freezes the elimination tallies") {
  cli_run r = run({"search", "--json"});
  REQUIRE(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  CHECK(rec["survivor_count"] == 1);
  CHECK(rec["survivors"][0]["curve"]["d"] == 6);
  CHECK(rec["survivors"][0]["curve"]["c"] == 24);
  CHECK(rec["survivors"][0]["N_lo"] == 5);
  CHECK(rec["survivors"][0]["N_hi"] == 5);
  CHECK(rec["survivors"][0]["threshold"] == "5");
  CHECK(rec["eliminated"]["genus_formula"] == 75);
  CHECK(rec["eliminated"]["cusp_upper"] == 123);
  CHECK(rec["eliminated"]["cusp_lower"] == 0);
  CHECK(rec["eliminated"]["divisibility"] == 1);
  CHECK(rec["eliminated"]["dual_nonneg"] == 2);
  CHECK(rec["eliminated"]["degree_bounds"] == 0);
  CHECK(rec["eliminated"]["total"] == 201);
  CHECK(!rec.contains("eliminations"));

  cli_run shown = run({"search", "--show-eliminated", "--json"});
  ordered_json shown_rec = ordered_json::parse(shown.out);
  REQUIRE(shown_rec.contains("eliminations"));
  CHECK(shown_rec["eliminations"].size() == 201);
}

TEST_CASE("family subcommands emit their frozen tables") {
  cli_run r = run({"family", "general-type", "--exceptions", "--json"});
  REQUIRE(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  REQUIRE(rec["count"] == 3);
  CHECK(rec["cases"][0]["m"] == 1);
  CHECK(rec["cases"][0]["k"] == 5);
  CHECK(rec["cases"][0]["chi"] == 1);
  CHECK(rec["cases"][0]["threshold"] == "80/13");
  CHECK(rec["cases"][1]["threshold"] == "5");
  CHECK(rec["cases"][2]["threshold"] == "32/5");
  CHECK(rec["degree_bound"] == 6);

  r = run({"family", "quadric", "-a", "1", "-b", "1"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "command = family quadric"));
  CHECK(contains(r.out, "smooth_double_plane = true"));
  CHECK(contains(r.out, "curve.plane_degree = 2"));
  CHECK(contains(r.out, "notes[0] = double plane branched along a smooth conic"));

  r = run({"family", "dual-nodal", "--exceptions", "--json"});
  REQUIRE(r.code == 0);
  rec = ordered_json::parse(r.out);
  CHECK(rec["count"] == 5);
  CHECK(rec["cases"][0]["delta"] == 4);
  CHECK(rec["cases"][0]["g"] == 3);
  CHECK(rec["cases"][0]["needs_external_argument"] == true);
  CHECK(rec["cases"][4]["threshold"] == "6");

  r = run({"family", "geography", "--minimal-double-cover", "--json"});
  REQUIRE(r.code == 0);
  rec = ordered_json::parse(r.out);
  CHECK(rec["minimal_chi"] == 486);
  CHECK(rec["double_cover"]["K2"] == 1944);
  CHECK(rec["double_cover"]["chi"] == 486);
  CHECK(rec["admissible"] == true);
}

TEST_CASE("homcount reproduces the cusp model class") {
  cli_run r = run({"homcount", "--points", "3", "--json"});
  REQUIRE(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  CHECK(rec["class_count"] == 1);
  CHECK(rec["classes"][0]["images"][0] == "(2 3)");
  CHECK(rec["classes"][0]["images"][1] == "(1 2)");
  CHECK(rec["classes"][0]["one_line"][0] == ordered_json::array({1, 3, 2}));
  CHECK(rec["classes"][0]["one_line"][1] == ordered_json::array({2, 1, 3}));

  cli_run none = run({"homcount", "--points", "4"});
  REQUIRE(none.code == 0);
  CHECK(contains(none.out, "class_count = 0"));
}

TEST_CASE("orbitcheck reports the dichotomy summary") {
  cli_run r = run({"orbitcheck", "--n1", "3", "--n2", "3", "--json"});
  REQUIRE(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  CHECK(rec["subgroups_containing_marker"] == 10);
  CHECK(rec["qualifying"] == 4);
  CHECK(rec["violations"] == 0);
}

TEST_CASE("usage errors exit with 1") {
  cli_run r = run({"chisini", "--d", "10", "--g", "51"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "--c"));

  r = run({"no-such-command"});
  CHECK(r.code == 1);

  r = run({"homcount", "--points", "9"});
  CHECK(r.code == 1);

  r = run({});
  CHECK(r.code == 1);  // a subcommand is required
}

TEST_CASE("refused computations exit with 2 and name the fault") {
  cli_run r = run({"family", "general-type", "-m", "2", "--k2", "1", "--chi", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(contains(r.err, "error: negative_nodes:"));
  CHECK(contains(r.err, "-8"));

  // c = 2(3d + g - 1) makes the threshold denominator vanish
  r = run({"chisini", "--d", "6", "--g", "0", "--c", "34", "--N", "5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "error: denominator_not_positive:"));

  // the validator reports an inconsistent node count instead of refusing...
  r = run({"invariants", "--d", "10", "--g", "51", "--c", "108", "--n", "13"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "validation.all_passed = false"));
  // ...but the verdict commands must not accept it
  r = run({"chisini", "--d", "10", "--g", "51", "--c", "108", "--n", "13", "--N", "5"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "violates the genus formula"));
}

TEST_CASE("large inputs keep exact integers in the record") {
  // d = 10^10 overflows 64-bit intermediates by ~20 digits; values must stay exact
  cli_run r = run({"dual", "--d", "10000000000", "--g", "0", "--c", "0", "--json"});
  REQUIRE(r.code == 0);
  ordered_json rec = ordered_json::parse(r.out);
  // delta = 2*deg + 2g - 2 - c with deg = 2d
  CHECK(rec["dual"]["delta"] == 39999999998);
  // nu = (delta-1)(delta-2)/2 - g - gamma fits only in a big integer: string form
  CHECK(rec["dual"]["nu"].is_string());
  CHECK(rec["dual"]["nu"] == "799999999800000000012");
}

TEST_CASE("rational strings are unquoted in text mode") {
  cli_run r = run({"family", "general-type", "-m", "1", "--k2", "5", "--chi", "1"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "verdict.threshold = 80/13"));
  CHECK(!contains(r.out, "\"80/13\""));
}
