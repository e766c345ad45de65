#pragma once

#include <vector>

#include "q4rank/integer.hpp"

namespace q4rank {

/// All n in [1, n_max] that give a valid field over Q(sqrt(l)): squarefree,
/// coprime to l, and odd when l = 2.  Ascending.
std::vector<long> admissible_n(long n_max, const Int& l);

}  // namespace q4rank
