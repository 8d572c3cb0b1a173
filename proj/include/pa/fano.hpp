#pragma once

// The seven flags of GF(2)^3 built from a point-line matching of the Fano
// plane: flag i has F_1 = <p_i>, F_2 = the matched line through p_i.

#include "pa/flags.hpp"
#include "pa/gf.hpp"

namespace pa {

// Sets the GFp modulus to 2 as a side effect.
std::vector<Flag<GFp>> fano_flags();

}  // namespace pa
