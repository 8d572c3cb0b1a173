#pragma once

#include <stdexcept>
#include <string>

namespace pa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct FieldMismatch : Error {
  using Error::Error;
};
struct NotTotallyRankable : Error {
  using Error::Error;
};
struct Inconsistent : Error {
  using Error::Error;
};
struct NotAntichain : Error {
  using Error::Error;
};
struct NotSubset : Error {
  using Error::Error;
};
struct NotPermutationArray : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};

// A defining polynomial splits over the base; factors are reported in the
// message so the caller can pick an irreducible one.
struct Reducible : Error {
  using Error::Error;
};
struct TowerHeightExceeded : Error {
  using Error::Error;
};
struct UnsupportedAlgebra : Error {
  using Error::Error;
};

// Chosen flags failed a general-position hypothesis.
struct NotGeneric : Error {
  using Error::Error;
};
struct DegenerateFlags : Error {
  using Error::Error;
};

}  // namespace pa
