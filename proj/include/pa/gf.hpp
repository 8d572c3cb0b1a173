#pragma once

// Prime-field scalars with a process-wide modulus, set once before use.
// Sufficient for the rank-table paths that need finite characteristic
// (notably GF(2)); the solver itself works over the rationals.

#include <cstdint>

#include "pa/errors.hpp"

namespace pa {

class GFp {
 public:
  GFp() : v_(0) {}
  GFp(long long v) : v_(normalize(v)) {}

  static void set_modulus(long long p);
  static long long modulus() { return p_; }

  long long value() const { return v_; }

  friend GFp operator+(GFp a, GFp b) { return GFp(a.v_ + b.v_); }
  friend GFp operator-(GFp a, GFp b) { return GFp(a.v_ - b.v_); }
  friend GFp operator*(GFp a, GFp b) { return GFp(a.v_ * b.v_); }
  friend GFp operator/(GFp a, GFp b) { return a * b.inverse(); }
  GFp operator-() const { return GFp(-v_); }
  friend bool operator==(GFp a, GFp b) { return a.v_ == b.v_; }
  friend bool operator!=(GFp a, GFp b) { return a.v_ != b.v_; }

  GFp inverse() const;

 private:
  static long long normalize(long long v) {
    if (p_ <= 0) throw UnsupportedAlgebra("GFp: modulus not set");
    v %= p_;
    return v < 0 ? v + p_ : v;
  }
  static long long p_;
  long long v_;
};

}  // namespace pa
