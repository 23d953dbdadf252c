#include "doctest.h"

#include <vector>

#include "chisini/error.hpp"
#include "chisini/product_lattice.hpp"

using namespace chisini;

TEST_CASE("3 x 3 lattice: four qualifying overgroups, no dichotomy violation") {
  product_orbit_report rep = verify_product_orbit_dichotomy(3, 3);
  CHECK(rep.n1 == 3);
  CHECK(rep.n2 == 3);
  CHECK(rep.subgroups_containing_marker == 10);
  CHECK(rep.qualifying == 4);
  CHECK(rep.violations == 0);
  REQUIRE(rep.entries.size() == 4);

  // two relabeled diagonals of order 6, then the two transitive overgroups
  CHECK(rep.entries[0].order == 6);
  CHECK(rep.entries[0].diagonal_conjugate);
  CHECK(rep.entries[0].orbit_of_origin == 3);
  CHECK(rep.entries[0].orbit_sizes == std::vector<std::size_t>{3, 6});

  CHECK(rep.entries[1].order == 6);
  CHECK(rep.entries[1].diagonal_conjugate);
  CHECK(rep.entries[1].orbit_of_origin == 6);
  CHECK(rep.entries[1].orbit_sizes == std::vector<std::size_t>{3, 6});

  CHECK(rep.entries[2].order == 18);
  CHECK(!rep.entries[2].diagonal_conjugate);
  CHECK(rep.entries[2].orbit_of_origin == 9);
  CHECK(rep.entries[2].orbit_sizes == std::vector<std::size_t>{9});

  CHECK(rep.entries[3].order == 36);
  CHECK(!rep.entries[3].diagonal_conjugate);
  CHECK(rep.entries[3].orbit_sizes == std::vector<std::size_t>{9});
}

TEST_CASE("3 x 4 lattice: unequal factors admit no diagonal, every action is transitive") {
  product_orbit_report rep = verify_product_orbit_dichotomy(3, 4);
  CHECK(rep.subgroups_containing_marker == 34);
  CHECK(rep.qualifying == 4);
  CHECK(rep.violations == 0);
  REQUIRE(rep.entries.size() == 4);
  std::vector<std::size_t> orders;
  for (const auto& e : rep.entries) {
    orders.push_back(e.order);
    CHECK(!e.diagonal_conjugate);
    CHECK(e.orbit_of_origin == 12);
    CHECK(e.orbit_sizes == std::vector<std::size_t>{12});
  }
  CHECK(orders == std::vector<std::size_t>{24, 24, 72, 144});
}

TEST_CASE("4 x 4 lattice: eight qualifying overgroups, diagonals of order 24") {
  product_orbit_report rep = verify_product_orbit_dichotomy(4, 4);
  CHECK(rep.subgroups_containing_marker == 136);
  CHECK(rep.qualifying == 8);
  CHECK(rep.violations == 0);
  REQUIRE(rep.entries.size() == 8);

  std::vector<std::size_t> orders;
  std::vector<bool> diagonal;
  std::vector<std::size_t> origin;
  for (const auto& e : rep.entries) {
    orders.push_back(e.order);
    diagonal.push_back(e.diagonal_conjugate);
    origin.push_back(e.orbit_of_origin);
  }
  CHECK(orders == std::vector<std::size_t>{24, 24, 24, 24, 96, 96, 288, 576});
  CHECK(diagonal == std::vector<bool>{true, true, true, true, false, false, false, false});
  CHECK(origin == std::vector<std::size_t>{4, 4, 12, 12, 16, 16, 16, 16});

  for (const auto& e : rep.entries) {
    if (e.diagonal_conjugate) {
      CHECK(e.orbit_sizes == std::vector<std::size_t>{4, 12});
    } else {
      CHECK(e.orbit_sizes == std::vector<std::size_t>{16});
    }
  }
}

TEST_CASE("asymmetry of the factors is only a relabeling") {
  product_orbit_report a = verify_product_orbit_dichotomy(2, 3);
  product_orbit_report b = verify_product_orbit_dichotomy(3, 2);
  CHECK(a.qualifying == b.qualifying);
  CHECK(a.violations == 0);
  CHECK(b.violations == 0);
  CHECK(a.subgroups_containing_marker == b.subgroups_containing_marker);
}

TEST_CASE("2 x 2 lattice: the marker group itself is the diagonal") {
  product_orbit_report rep = verify_product_orbit_dichotomy(2, 2);
  CHECK(rep.violations == 0);
  CHECK(rep.qualifying >= 2);  // the diagonal and the full product at least
  bool saw_diagonal = false;
  for (const auto& e : rep.entries) {
    if (e.order == 2) {
      saw_diagonal = true;
      CHECK(e.diagonal_conjugate);
      CHECK(e.orbit_sizes == std::vector<std::size_t>{2, 2});
    }
  }
  CHECK(saw_diagonal);
}

TEST_CASE("degree guard") {
  CHECK_THROWS_AS(verify_product_orbit_dichotomy(1, 3), domain_error);
  CHECK_THROWS_AS(verify_product_orbit_dichotomy(3, 5), domain_error);
  try {
    verify_product_orbit_dichotomy(5, 5);
  } catch (const domain_error& e) {
    CHECK(e.kind() == fault::budget_exceeded);
  }
}
