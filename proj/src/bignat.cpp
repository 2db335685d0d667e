#include "ekrlab/bignat.hpp"

#include <stdexcept>

namespace ekrlab {

std::string to_string(const BigInt& v) { return v.str(); }

BigNat to_nat(BigInt v) {
  if (v < 0) throw std::logic_error("negative value where a count was expected: " + v.str());
  return v;
}

}  // namespace ekrlab
