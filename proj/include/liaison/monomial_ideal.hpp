#pragma once

#include <map>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial.hpp"

namespace liaison {

// Ideal generated by monomials inside an explicit ambient universe of variables.
// Generators are kept minimal and structurally sorted. The universe order is
// significant for stability predicates (universe[0] plays the role of x_1).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<Monomial> gens, std::vector<Variable> universe);
  static MonomialIdeal unit(std::vector<Variable> universe);
  static MonomialIdeal generated_by_variables(const std::vector<Variable>& vars,
                                              std::vector<Variable> universe);

  const std::vector<Monomial>& generators() const { return gens_; }
  const std::vector<Variable>& universe() const { return universe_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }
  bool is_squarefree() const;
  bool is_generated_by_variables() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  // Ideal equality; universes are not compared.
  bool operator==(const MonomialIdeal& other) const { return gens_ == other.gens_; }

  std::vector<Variable> support() const;
  std::uint32_t max_exponent(Variable v) const;

  MonomialIdeal with_universe(std::vector<Variable> universe) const;
  MonomialIdeal mapped(const std::function<Variable(Variable)>& f,
                       std::vector<Variable> universe) const;

 private:
  std::vector<Monomial> gens_;
  std::vector<Variable> universe_;
};

std::vector<Monomial> minimalize(std::vector<Monomial> gens);
MonomialIdeal minimal_generators(std::vector<Monomial> gens, std::vector<Variable> universe);
std::vector<Variable> universe_union(const std::vector<Variable>& a, const std::vector<Variable>& b);

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator*(const Monomial& m, const MonomialIdeal& a);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal colon(const MonomialIdeal& a, Variable v);

// Minimal primes as sorted variable sets (minimal vertex covers of the support hypergraph).
std::vector<std::vector<Variable>> minimal_primes(const MonomialIdeal& ideal);
int height(const MonomialIdeal& ideal);
int dimension(const MonomialIdeal& ideal);

// ---- polarization ----------------------------------------------------------

// b_i per variable base; bases absent from the map are polarized fully.
class PolarizationVector {
 public:
  PolarizationVector() = default;
  explicit PolarizationVector(std::map<std::int32_t, std::uint32_t> entries);
  static PolarizationVector full(const MonomialIdeal& ideal);
  // b_i = ordinals[k] for the k-th universe variable.
  static PolarizationVector from_list(const std::vector<Variable>& universe,
                                      const std::vector<std::uint32_t>& b);

  std::uint32_t at(std::int32_t base, std::uint32_t fallback) const;
  bool has(std::int32_t base) const { return b_.count(base) != 0; }
  const std::map<std::int32_t, std::uint32_t>& entries() const { return b_; }
  bool operator==(const PolarizationVector&) const = default;

 private:
  std::map<std::int32_t, std::uint32_t> b_;
};

Monomial polarize_monomial(const Monomial& m, const PolarizationVector& b);
// P_b(I); requires a universe of layer-1 variables.
MonomialIdeal polarize(const MonomialIdeal& ideal, const PolarizationVector& b);
MonomialIdeal polarize(const MonomialIdeal& ideal);
// Universe of P_b(I): every x_{i,1} plus layers up to min(max exponent, b_i).
std::vector<Variable> polarized_universe(const MonomialIdeal& ideal, const PolarizationVector& b);
MonomialIdeal depolarize(const MonomialIdeal& ideal);
// Squarefree model with fresh layers for any universe (layered variables allowed).
MonomialIdeal squarefree_model(const MonomialIdeal& ideal);

// ---- invariants ------------------------------------------------------------

struct KPolynomial {
  std::vector<long long> numerator;  // coefficient of t^k
  int ambient_dim = 0;

  // Hilbert series coefficients of degrees 0..upto.
  std::vector<long long> series(int upto) const;
  // Krull dimension and multiplicity from the reduced form h(t)/(1-t)^d.
  int krull_dimension() const;
  long long multiplicity() const;
  bool operator==(const KPolynomial&) const = default;
};

KPolynomial k_polynomial(const MonomialIdeal& ideal);
KPolynomial k_polynomial_taylor(const MonomialIdeal& ideal);
KPolynomial k_polynomial_pivot(const MonomialIdeal& ideal);

bool is_unmixed(const MonomialIdeal& ideal);
bool is_cohen_macaulay(const MonomialIdeal& ideal, const Field& field = Field::from_environment());
// Requires a proper unmixed ideal.
bool is_G0(const MonomialIdeal& ideal);
bool is_stable(const MonomialIdeal& ideal);
bool is_strongly_stable(const MonomialIdeal& ideal);
bool is_artinian(const MonomialIdeal& ideal);

}  // namespace liaison
