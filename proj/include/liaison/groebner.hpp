#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liaison/monomial_ideal.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/term_order.hpp"

namespace liaison {

class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> elements, TermOrder order, bool reduced)
      : elements_(std::move(elements)), order_(std::move(order)), reduced_(reduced) {}

  const std::vector<Polynomial>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }
  bool is_reduced() const { return reduced_; }
  bool is_unit() const;
  bool is_zero() const { return elements_.empty(); }
  std::size_t size() const { return elements_.size(); }
  std::vector<Monomial> leading_monomials() const;

 private:
  std::vector<Polynomial> elements_;
  TermOrder order_;
  bool reduced_;
};

// f = sum q_i g_i + r with no term of r divisible by any LM(g_i); first divisor wins.
struct StandardExpression {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

StandardExpression divide(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order);
Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const TermOrder& order);

struct BuchbergerOptions {
  bool chain_criterion = true;
};
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t reductions_to_zero = 0;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                         BuchbergerOptions options = {}, BuchbergerStats* stats = nullptr);
GroebnerBasis reduce_gb(const GroebnerBasis& basis);
// buchberger followed by reduce_gb.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, const TermOrder& order);

MonomialIdeal initial_ideal(const GroebnerBasis& basis);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);
bool membership(const Polynomial& f, const GroebnerBasis& basis);
bool contains_all(const GroebnerBasis& basis, const std::vector<Polynomial>& polys);
// Buchberger criterion audit: every s-polynomial reduces to zero.
bool is_groebner_basis(const std::vector<Polynomial>& elements, const TermOrder& order);

bool is_y_compatible(const TermOrder& order, const GroebnerBasis& basis, Variable y);
// True for orders whose first comparison is on the y-exponent.
bool is_y_compatible_global(const TermOrder& order, Variable y);

// Requires homogeneous generators (standard grading).
KPolynomial hilbert_series_quotient(const std::vector<Polynomial>& generators, const TermOrder& order);

// ---- ideal operations ------------------------------------------------------

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);
GroebnerBasis ideal_intersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                 const TermOrder& order);
GroebnerBasis ideal_colon(const std::vector<Polynomial>& a, const Polynomial& f, const TermOrder& order);
bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const TermOrder& order);
int ideal_height(const GroebnerBasis& basis);
// Smallest p <= budget with f^p in the ideal, or nullopt.
std::optional<unsigned> radical_power(const Polynomial& f, const GroebnerBasis& basis, unsigned budget = 6);
bool is_monomial_ideal(const std::vector<Polynomial>& generators);
MonomialIdeal as_monomial_ideal(const std::vector<Polynomial>& generators, std::vector<Variable> universe);
std::vector<Polynomial> as_polynomials(const MonomialIdeal& ideal);
// Minimal homogeneous generating subset (graded Nakayama); requires homogeneous input.
std::vector<Polynomial> minimal_homogeneous_generators(const std::vector<Polynomial>& generators,
                                                       const TermOrder& order);

}  // namespace liaison
