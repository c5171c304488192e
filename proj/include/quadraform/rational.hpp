#ifndef QUADRAFORM_RATIONAL_HPP
#define QUADRAFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadraform {

// Exact rationals over arbitrary-precision integers. GMP keeps values in
// canonical form (positive denominator, coprime numerator/denominator) as
// long as inputs are canonical, which rational_from_string guarantees.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
/// Throws Error(ParseError) on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// Renders as "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

inline Rational rational_int(long value) { return Rational(value); }

}  // namespace quadraform

#endif
