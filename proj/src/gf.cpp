#include "pa/gf.hpp"

#include <utility>

namespace pa {

long long GFp::p_ = 0;

void GFp::set_modulus(long long p) {
  if (p < 2) throw UnsupportedAlgebra("GFp: modulus must be a prime >= 2");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw UnsupportedAlgebra("GFp: modulus must be prime");
  p_ = p;
}

GFp GFp::inverse() const {
  if (v_ == 0) throw Error("GFp: division by zero");
  // extended Euclid
  long long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b) {
    long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  return GFp(x0);
}

}  // namespace pa
