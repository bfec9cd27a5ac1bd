#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liaison {

using Rational = mpq_class;

// "p/q" or "p"; throws PreconditionError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace liaison
