#pragma once

#include <gmpxx.h>

namespace q4rank {

// All field data (Pell coefficients, conductors, enumeration bounds) is kept
// exact; Pell units grow exponentially in sqrt(l), so fixed-width integers
// are not an option.
using Int = mpz_class;

}  // namespace q4rank
