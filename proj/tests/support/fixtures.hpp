#pragma once

#include <random>
#include <string>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/io/document.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/simplicial.hpp"

namespace fixture {

// A named ring built from a ring statement, e.g. "ring x, y, z lex".
class Ring {
 public:
  explicit Ring(const std::string& declaration);

  liaison::Variable v(const std::string& name) const;
  std::vector<liaison::Variable> vs(const std::vector<std::string>& names) const;
  liaison::Polynomial p(const std::string& text);
  // Comma separated generators; an empty string is the zero ideal.
  std::vector<liaison::Polynomial> ideal(const std::string& text);
  // Monomial ideal over the ring variables (or an explicit universe).
  liaison::MonomialIdeal mono(const std::string& text);
  liaison::MonomialIdeal mono(const std::string& text, const std::vector<liaison::Variable>& universe);
  liaison::Monomial m(const std::string& text);
  liaison::TermOrder order() const { return doc.order_spec.build(declared_); }
  const std::vector<liaison::Variable>& variables() const { return declared_; }
  std::string show(const liaison::Polynomial& f) const { return liaison::io::format(f, doc.names); }
  std::string show(const std::vector<liaison::Polynomial>& I) const {
    return liaison::io::format_ideal(I, doc.names);
  }
  std::string show(const liaison::MonomialIdeal& I) const { return liaison::io::format(I, doc.names); }

  liaison::io::SourceDocument doc;

 private:
  std::vector<liaison::Variable> declared_;
};

// Ideal-level equality under a given order.
bool same_ideal(const std::vector<liaison::Polynomial>& a, const std::vector<liaison::Polynomial>& b,
                const liaison::TermOrder& order);

// Sorted display of a polynomial list up to sign and scaling (monic under order).
std::vector<liaison::Polynomial> monic_sorted(std::vector<liaison::Polynomial> gens, const liaison::TermOrder& order);

// Random stable ideal of height h in the first h of n variables (generators of degree <= 3,
// closed under x_i u / x_{m(u)}), which makes it Cohen-Macaulay.
liaison::MonomialIdeal random_stable_cm_ideal(std::mt19937& rng, int n);
// Random ideal containing a pure power (exponent <= 3) of each of n variables.
liaison::MonomialIdeal random_artinian_ideal(std::mt19937& rng, int n);
// Random monomial ideal with exponents <= max_exp.
liaison::MonomialIdeal random_monomial_ideal(std::mt19937& rng, int n, int gens, int max_exp);
std::vector<liaison::Variable> plain_variables(int n);

}  // namespace fixture
