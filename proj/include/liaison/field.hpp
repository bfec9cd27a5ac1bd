#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace liaison {

// Coefficient field for homology: the rationals or F_p.
struct Field {
  enum class Kind { Rational, Prime };
  Kind kind = Kind::Rational;
  std::int64_t p = 0;

  static Field rationals() { return {}; }
  static Field prime(std::int64_t p);
  // "Q" or "Fp:<p>".
  static Field parse(std::string_view text);
  // LIAISON_FIELD, defaulting to Q.
  static Field from_environment();
  std::string describe() const;
  bool operator==(const Field&) const = default;
};

}  // namespace liaison
