#include "doctest.h"

#include <sstream>
#include <vector>

#include "chisini/error.hpp"
#include "chisini/homsearch.hpp"
#include "chisini/perm.hpp"
#include "chisini/presentation.hpp"

using namespace chisini;

namespace {

permutation tr(int n, int i, int j) { return permutation::transposition(n, i, j); }

}  // namespace

TEST_CASE("word evaluation") {
  std::vector<permutation> images{tr(3, 1, 2), tr(3, 2, 3)};
  CHECK(evaluate_word(images, word{{1, 2}}).cycle_string() == "(1 3 2)");
  CHECK(evaluate_word(images, word{{1, -1}}).is_identity());
  CHECK(evaluate_word(images, word{{}}).degree() == 3);
  CHECK(evaluate_word(images, word{{}}).is_identity());
  CHECK(evaluate_word(images, word{{-2}}) == tr(3, 2, 3));
  CHECK(evaluate_word(images, word{{1, 2, 1, -2, -1, -2}}).is_identity());  // braid relation
  CHECK_THROWS_AS(evaluate_word(images, word{{3}}), domain_error);
  CHECK_THROWS_AS(evaluate_word(images, word{{0}}), domain_error);
}

TEST_CASE("canonical form is a conjugation invariant") {
  std::vector<permutation> tuple{tr(3, 1, 2), tr(3, 2, 3)};
  std::vector<permutation> expected{tr(3, 2, 3), tr(3, 1, 2)};
  CHECK(canonical_images(tuple) == expected);
  CHECK(canonical_images(expected) == expected);  // already minimal

  for (const permutation& g : symmetric_group(3)) {
    std::vector<permutation> relabeled;
    for (const permutation& p : tuple) relabeled.push_back(p.conjugated_by(g));
    CHECK(canonical_images(relabeled) == expected);
  }

  // a non-conjugate tuple canonicalizes elsewhere
  std::vector<permutation> other{tr(3, 1, 2), tr(3, 1, 2)};
  CHECK(canonical_images(other) != expected);
}

TEST_CASE("cusp model admits exactly one class on three points and none on four") {
  marked_presentation pres = marked_presentation::braid3();

  std::vector<hom_class> on3 = enumerate_admissible(pres, 3);
  REQUIRE(on3.size() == 1);
  CHECK(on3.front().n_points == 3);
  REQUIRE(on3.front().images.size() == 2);
  CHECK(on3.front().images[0].cycle_string() == "(2 3)");
  CHECK(on3.front().images[1].cycle_string() == "(1 2)");

  CHECK(enumerate_admissible(pres, 4).empty());
  CHECK(enumerate_admissible(pres, 2).empty());  // cusp images must not commute
}

TEST_CASE("three free geometric generators: four classes on three and on four points") {
  marked_presentation pres;
  pres.generators = {"x", "y", "z"};
  pres.geometric = {word{{1}}, word{{2}}, word{{3}}};

  CHECK(enumerate_admissible(pres, 3).size() == 4);
  CHECK(enumerate_admissible(pres, 4).size() == 4);
}

TEST_CASE("node model needs the intransitive switch") {
  marked_presentation pres;
  pres.generators = {"a", "b"};
  pres.relators = {word{{1, 2, -1, -2}}};
  pres.geometric = {word{{1}}, word{{2}}};
  pres.nodes = {{word{{1}}, word{{2}}}};

  CHECK(enumerate_admissible(pres, 4).empty());  // disjoint transpositions never act transitively

  admissible_options loose;
  loose.require_transitive = false;
  std::vector<hom_class> classes = enumerate_admissible(pres, 4, loose);
  REQUIRE(classes.size() == 1);
  CHECK(classes.front().images[0].cycle_string() == "(3 4)");
  CHECK(classes.front().images[1].cycle_string() == "(1 2)");

  // on three points two distinct transpositions never commute
  CHECK(enumerate_admissible(pres, 3, loose).empty());
}

TEST_CASE("worker count does not change the result") {
  marked_presentation pres;
  pres.generators = {"x", "y", "z"};
  pres.geometric = {word{{1}}, word{{2}}, word{{3}}};
  admissible_options serial;
  serial.workers = 1;
  admissible_options wide;
  wide.workers = 7;
  CHECK(enumerate_admissible(pres, 4, serial) == enumerate_admissible(pres, 4, wide));
}

TEST_CASE("assignment budget") {
  admissible_options tight;
  tight.budget = 8;  // braid3 on 3 points scans 3 x 3 = 9 raw assignments
  CHECK_THROWS_AS(enumerate_admissible(marked_presentation::braid3(), 3, tight), domain_error);
  try {
    enumerate_admissible(marked_presentation::braid3(), 3, tight);
  } catch (const domain_error& e) {
    CHECK(e.kind() == fault::budget_exceeded);
  }
  tight.budget = 9;
  CHECK_NOTHROW(enumerate_admissible(marked_presentation::braid3(), 3, tight));
}

TEST_CASE("componentwise pair action orbits") {
  std::vector<permutation> f{tr(3, 1, 2), tr(3, 2, 3)};
  CHECK(pair_action_orbits(f, f) == std::vector<std::size_t>{3, 6});

  // forgetting one generator leaves the grid in finer pieces
  std::vector<permutation> g{tr(3, 1, 2)};
  CHECK(pair_action_orbits(g, g) == std::vector<std::size_t>{1, 2, 2, 2, 2});

  // joint surjection onto a 3 x 4 grid
  std::vector<permutation> f1{tr(3, 1, 2), tr(3, 2, 3), tr(3, 1, 2)};
  std::vector<permutation> f2{tr(4, 1, 2), tr(4, 2, 3), tr(4, 3, 4)};
  CHECK(pair_action_orbits(f1, f2) == std::vector<std::size_t>{12});

  std::vector<permutation> empty;
  CHECK_THROWS_AS(pair_action_orbits(empty, empty), domain_error);
  std::vector<permutation> short_list{tr(3, 1, 2)};
  CHECK_THROWS_AS(pair_action_orbits(f, short_list), domain_error);
}

TEST_CASE("built-in local model suite passes") {
  local_model_report rep = local_model_suite();
  CHECK(rep.all_passed());
  REQUIRE(rep.items.size() == 4);
  CHECK(rep.items[0].name == "braid_relation");
  CHECK(rep.items[1].name == "unique_admissible_class");
  CHECK(rep.items[2].name == "cusp_pair_orbits");
  CHECK(rep.items[3].name == "six_point_action");
  for (const auto& item : rep.items) CHECK(item.passed);
}

TEST_CASE("presentation text format") {
  std::istringstream in(
      "# cusp local model\n"
      "generators a b\n"
      "relator a b a b' a' b'\n"
      "geometric a\n"
      "geometric b\n"
      "cusp a , b\n");
  marked_presentation pres = parse_presentation(in);
  CHECK(pres.generators == std::vector<std::string>{"a", "b"});
  REQUIRE(pres.relators.size() == 1);
  CHECK(pres.relators.front() == word{{1, 2, 1, -2, -1, -2}});
  CHECK(pres.geometric.size() == 2);
  REQUIRE(pres.cusps.size() == 1);
  CHECK(pres.cusps.front().first == word{{1}});
  CHECK(pres.cusps.front().second == word{{2}});
  CHECK(pres.nodes.empty());

  // identical to the built-in model
  marked_presentation builtin = marked_presentation::braid3();
  CHECK(pres.relators == builtin.relators);
  CHECK(pres.geometric == builtin.geometric);
  CHECK(pres.cusps == builtin.cusps);

  CHECK(word_string(pres, pres.relators.front()) == "a b a b' a' b'");
}

TEST_CASE("shipped presentation files parse and reproduce the frozen classes") {
  marked_presentation braid = load_presentation(std::string(TEST_DATA_DIR) +
                                                "/presentations/braid3.pres");
  CHECK(braid.generators.size() == 2);
  CHECK(enumerate_admissible(braid, 3).size() == 1);

  marked_presentation node = load_presentation(std::string(TEST_DATA_DIR) +
                                               "/presentations/node_pair.pres");
  REQUIRE(node.nodes.size() == 1);
  admissible_options loose;
  loose.require_transitive = false;
  CHECK(enumerate_admissible(node, 4, loose).size() == 1);
}

TEST_CASE("parse errors carry the line number") {
  auto expect_error = [](const std::string& text, const std::string& fragment) {
    std::istringstream in(text);
    try {
      parse_presentation(in);
      FAIL_CHECK("expected a parse error for: " << text);
    } catch (const domain_error& e) {
      CHECK(e.kind() == fault::parse_error);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error("relator a\ngenerators a\n", "line 1: 'generators' must come first");
  expect_error("generators a\nrelator b\n", "line 2: unknown generator 'b'");
  expect_error("generators a\nrelator\n", "line 2: empty word");
  expect_error("generators a b\ncusp a b\n", "expected two words separated by ','");
  expect_error("generators a\ngenerators b\n", "repeated generators line");
  expect_error("generators a a\n", "duplicate generator 'a'");
  expect_error("generators a\nfoo a\n", "unknown keyword 'foo'");
  expect_error("# only comments\n", "no generators line");
  expect_error("generators a'\n", "invalid generator name");

  CHECK_THROWS_AS(load_presentation("/nonexistent/file.pres"), domain_error);
}
