#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace contactlab {

// Exact rational arithmetic. Charge conservation and the LP certificates are
// asserted as exact equalities, so no floating point is allowed on these paths.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_string(const Rat& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace contactlab
