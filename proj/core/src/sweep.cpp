#include "q4rank/sweep.hpp"

#include "q4rank/errors.hpp"

namespace q4rank {

std::vector<long> admissible_n(long n_max, const Int& l) {
  if (n_max < 0) {
    throw input_error(errc::bad_argument, "n_max must be nonnegative");
  }
  std::vector<bool> squarefree(static_cast<std::size_t>(n_max) + 1, true);
  for (long d = 2; d * d <= n_max; ++d) {
    for (long m = d * d; m <= n_max; m += d * d) squarefree[m] = false;
  }
  std::vector<long> out;
  for (long n = 1; n <= n_max; ++n) {
    if (!squarefree[n]) continue;
    if (l == 2 && n % 2 == 0) continue;
    if (gcd(Int(n), l) != 1) continue;
    out.push_back(n);
  }
  return out;
}

}  // namespace q4rank
