#pragma once

#include <climits>
#include <vector>

#include "liaison/monomial.hpp"
#include "liaison/rational.hpp"

namespace liaison {

class TermOrder;

struct Term {
  Rational coef;
  Monomial mono;
};

// Finite sum of terms. Canonical storage: structurally descending monomials,
// nonzero coefficients, no repeated monomials.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(implicit)
  explicit Polynomial(const Rational& c);
  explicit Polynomial(Monomial m, Rational c = 1);
  static Polynomial variable(Variable v) { return Polynomial(Monomial::of(v)); }
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::vector<Variable> variables() const;
  Rational coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Monomial& m) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(std::uint32_t k) const;

  Polynomial mapped(const std::function<Variable(Variable)>& f) const;
  Polynomial monic(const TermOrder& order) const;

  std::vector<Term> sorted(const TermOrder& order) const;
  const Term& leading_term(const TermOrder& order) const;
  const Monomial& leading_monomial(const TermOrder& order) const {
    return leading_term(order).mono;
  }

  bool operator==(const Polynomial& o) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline constexpr int kNegInfinity = INT_MIN;

// Highest power of y in f; kNegInfinity for f = 0.
int deg_y(const Polynomial& f, Variable y);
// Sum of the terms of f of maximal y-degree.
Polynomial in_y(const Polynomial& f, Variable y);
// y_primed -> y substitution.
Monomial depol(const Monomial& m, Variable y, Variable y_primed);
Polynomial depol(const Polynomial& f, Variable y, Variable y_primed);

}  // namespace liaison
