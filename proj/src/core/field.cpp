#include "liaison/field.hpp"

#include <cstdlib>

#include "liaison/errors.hpp"

namespace liaison {

Field Field::prime(std::int64_t p) {
  if (p < 2 || p > 2147483647) throw PreconditionError("field characteristic out of range");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw PreconditionError("F_p requires a prime p, got " + std::to_string(p));
  return {Kind::Prime, p};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw PreconditionError("malformed field '" + std::string(text) + "'");
    return prime(std::stoll(digits));
  }
  throw PreconditionError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Field Field::from_environment() {
  const char* env = std::getenv("LIAISON_FIELD");
  if (env == nullptr || *env == '\0') return rationals();
  return parse(env);
}

std::string Field::describe() const { return kind == Kind::Rational ? "Q" : "Fp:" + std::to_string(p); }

}  // namespace liaison
