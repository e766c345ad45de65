#pragma once

#include <stdexcept>
#include <string>

namespace q4rank {

// Reasons an input can be rejected.  `deferred_modulus` is kept separate from
// `unsupported_modulus` so callers can tell "outside the theory handled here"
// (l = 5 mod 8, which needs different machinery) from plain bad input.
enum class errc {
  not_prime,
  unsupported_modulus,
  deferred_modulus,
  not_squarefree,
  not_coprime,
  even_n_with_sqrt2,
  bad_argument,
};

class input_error : public std::invalid_argument {
 public:
  input_error(errc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace q4rank
