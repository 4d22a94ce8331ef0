#pragma once

#include <span>

#include "gstirling/poly.hpp"

namespace gstirling {

enum class factorial_kind { raising, falling };

/// n-factor generalized factorial of x with increment step:
///   raising: x(x+step)(x+2*step)...(x+(n-1)*step)
///   falling: x(x-step)(x-2*step)...(x-(n-1)*step)
/// n = 0 gives 1 in both kinds.
multipoly gen_factorial(factorial_kind kind, const multipoly& x, const multipoly& step,
                        unsigned n);
rational gen_factorial(factorial_kind kind, const rational& x, const rational& step, unsigned n);

integer factorial(unsigned n);

/// C(n, k), zero outside 0 <= k <= n.
integer binomial(unsigned n, long k);

/// n! / (parts[0]! * parts[1]! * ...). Parts must sum to n; throws
/// parts_mismatch otherwise.
integer multinomial(unsigned n, std::span<const unsigned> parts);

}  // namespace gstirling
