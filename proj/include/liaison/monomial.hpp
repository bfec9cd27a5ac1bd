#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "liaison/variable.hpp"

namespace liaison {

// Sparse power product: entries strictly increasing by Variable, exponents >= 1.
class Monomial {
 public:
  using Entry = std::pair<Variable, std::uint32_t>;
  using Storage = boost::container::small_vector<Entry, 4>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);
  static Monomial of(Variable v, std::uint32_t exponent = 1);

  std::span<const Entry> entries() const { return {e_.data(), e_.size()}; }
  std::size_t size() const { return e_.size(); }
  bool is_one() const { return e_.empty(); }
  std::uint32_t exponent(Variable v) const;
  std::uint32_t degree() const;
  bool is_squarefree() const;
  std::vector<Variable> support() const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other) { return *this = *this * other; }
  // Requires divides(*this, other) reversed: other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial pow(std::uint32_t k) const;
  // Drops every variable for which keep(v) is false.
  Monomial restricted(const std::function<bool(Variable)>& keep) const;
  // Applies a variable substitution v -> f(v); exponents of colliding images add up.
  Monomial mapped(const std::function<Variable(Variable)>& f) const;
  Monomial with_exponent(Variable v, std::uint32_t e) const;

  bool operator==(const Monomial& other) const { return e_ == other.e_; }
  // Structural total order (degree, then entries). Not a term order.
  std::strong_ordering operator<=>(const Monomial& other) const;
  std::size_t hash() const;

 private:
  Storage e_;
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace liaison
