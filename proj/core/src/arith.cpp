#include "chisini/arith.hpp"

#include <limits>

#include "chisini/error.hpp"

namespace chisini {

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

Int floor_rat(const Rat& q) {
  Int num = rat_num(q), den = rat_den(q);
  Int t = num / den;  // truncates toward zero
  if (num < 0 && t * den != num) --t;
  return t;
}

Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

Int rat_to_int(const Rat& q) {
  if (!rat_is_integer(q)) raise(fault::invalid_argument, "rational " + rat_string(q) + " is not integral");
  return rat_num(q);
}

std::string rat_string(const Rat& q) {
  if (rat_is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

std::string int_string(const Int& v) { return v.str(); }

bool fits_int64(const Int& v) {
  return v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max();
}

}  // namespace chisini
