#pragma once

#include <gmpxx.h>

namespace akzeta {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, r) as an exact integer; 0 outside 0 <= r <= n.
Integer binomial(long n, long r);

}  // namespace akzeta
