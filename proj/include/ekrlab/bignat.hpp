#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekrlab {

// Every count in the library is exact. BigNat values are nonnegative by
// construction; BigInt is used for formulas with signed intermediate terms.
using BigInt = boost::multiprecision::cpp_int;
using BigNat = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);

// Throws std::logic_error if v is negative. Used at the boundary where a
// signed computation is known to produce a count.
BigNat to_nat(BigInt v);

}  // namespace ekrlab
