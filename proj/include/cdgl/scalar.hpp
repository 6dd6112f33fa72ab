#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cdgl {

/// Exact rational; gmp keeps it canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Always "p/q", also for integers ("3/1", "0/1").
std::string to_string(const Scalar& value);

/// Accepts "p/q" or "p" with an optional sign. Throws ParseError.
Scalar parse_scalar(std::string_view text);

Scalar factorial(int n);

Scalar binomial(int n, int k);

}  // namespace cdgl
