#include "doctest.h"

#include "chisini/arith.hpp"
#include "chisini/error.hpp"

using namespace chisini;

TEST_CASE("floor and ceil agree with mathematical rounding") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(6, 3)) == 2);
  CHECK(ceil_rat(Rat(6, 3)) == 2);
  CHECK(floor_rat(Rat(0)) == 0);
  CHECK(floor_rat(Rat(80, 13)) == 6);
  CHECK(ceil_rat(Rat(80, 13)) == 7);
  CHECK(floor_rat(Rat(-1, 1000000)) == -1);
}

TEST_CASE("rational arithmetic keeps the denominator positive") {
  Rat q = Rat(4) / Rat(-6);
  CHECK(rat_num(q) == -2);
  CHECK(rat_den(q) == 3);
  CHECK(rat_string(q) == "-2/3");
  CHECK(rat_num(Rat(-4, 6)) == -2);
  CHECK(rat_den(Rat(-4, 6)) == 3);
}

TEST_CASE("rat_string prints integers without a denominator") {
  CHECK(rat_string(Rat(80, 13)) == "80/13");
  CHECK(rat_string(Rat(12, 2)) == "6");
  CHECK(rat_string(Rat(0)) == "0");
}

TEST_CASE("rat_to_int refuses proper fractions") {
  CHECK(rat_to_int(Rat(10, 2)) == 5);
  CHECK_THROWS_AS(rat_to_int(Rat(1, 2)), domain_error);
  CHECK(rat_is_integer(Rat(9, 3)));
  CHECK(!rat_is_integer(Rat(9, 4)));
}

TEST_CASE("fits_int64 tracks the 64-bit boundary exactly") {
  Int max64 = Int("9223372036854775807");
  CHECK(fits_int64(max64));
  CHECK(!fits_int64(max64 + 1));
  Int min64 = Int("-9223372036854775808");
  CHECK(fits_int64(min64));
  CHECK(!fits_int64(min64 - 1));
}

TEST_CASE("fault names are stable identifiers") {
  CHECK(fault_name(fault::negative_nodes) == "negative_nodes");
  CHECK(fault_name(fault::denominator_not_positive) == "denominator_not_positive");
  CHECK(fault_name(fault::parse_error) == "parse_error");
  try {
    raise(fault::budget_exceeded, "probe");
    FAIL("raise must throw");
  } catch (const domain_error& e) {
    CHECK(e.kind() == fault::budget_exceeded);
    CHECK(std::string(e.what()) == "probe");
  }
}
