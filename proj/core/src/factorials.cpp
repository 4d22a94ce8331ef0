#include "gstirling/factorials.hpp"

#include <numeric>

namespace gstirling {

multipoly gen_factorial(factorial_kind kind, const multipoly& x, const multipoly& step,
                        unsigned n) {
  multipoly out{1L};
  for (unsigned i = 0; i < n; ++i) {
    multipoly offset = step * integer(i);
    out *= kind == factorial_kind::raising ? x + offset : x - offset;
  }
  return out;
}

rational gen_factorial(factorial_kind kind, const rational& x, const rational& step, unsigned n) {
  rational out = 1;
  for (unsigned i = 0; i < n; ++i) {
    const rational offset = step * i;
    out *= kind == factorial_kind::raising ? x + offset : x - offset;
  }
  return out;
}

integer factorial(unsigned n) {
  integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

integer binomial(unsigned n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

integer multinomial(unsigned n, std::span<const unsigned> parts) {
  const unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != n)
    throw parts_mismatch("parts sum to " + std::to_string(sum) + ", expected " +
                         std::to_string(n));
  integer out = 1;
  unsigned remaining = n;
  for (unsigned part : parts) {
    out *= binomial(remaining, static_cast<long>(part));
    remaining -= part;
  }
  return out;
}

}  // namespace gstirling
