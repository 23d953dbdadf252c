#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chisini {

/// Arbitrary-precision signed integer. Every quantity in this library is
/// computed exactly; no floating point appears anywhere in the public API or
/// the implementation.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, kept reduced with a positive denominator by the
/// backing type.
using Rat = boost::multiprecision::cpp_rational;

Int rat_num(const Rat& q);
Int rat_den(const Rat& q);

/// Largest integer <= q.
Int floor_rat(const Rat& q);

/// Smallest integer >= q.
Int ceil_rat(const Rat& q);

bool rat_is_integer(const Rat& q);

/// Value of an integral rational; raises invalid_argument otherwise.
Int rat_to_int(const Rat& q);

/// "80/13" for proper fractions, "6" for integral values.
std::string rat_string(const Rat& q);

std::string int_string(const Int& v);

/// True when v fits in a signed 64-bit integer (used by serializers to decide
/// between a JSON number and a decimal string).
bool fits_int64(const Int& v);

}  // namespace chisini
