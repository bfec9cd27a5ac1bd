#include <algorithm>

#include "engine.hpp"
#include "liaison/errors.hpp"
#include "liaison/groebner.hpp"

namespace liaison {

namespace {

TermOrder order_for(const std::vector<Polynomial>& polys) {
  std::vector<Variable> vars;
  for (const auto& f : polys)
    for (Variable v : f.variables()) vars.push_back(v);
  return TermOrder::lex(sorted_unique(std::move(vars)));
}

Variable fresh_variable(const TermOrder& order) {
  std::int32_t base = 0;
  for (Variable v : order.variables()) base = std::max(base, v.base);
  return Variable{base + 1, 1};
}

}  // namespace

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  TermOrder order = order_for({f, g});
  std::vector<Polynomial> ds{g};
  StandardExpression e = divide(f, ds, order);
  if (!e.remainder.is_zero()) throw PreconditionError("polynomial division is not exact");
  return e.quotients[0];
}

GroebnerBasis ideal_intersection(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                 const TermOrder& order) {
  Variable t = fresh_variable(order);
  TermOrder elim = TermOrder::product({t}, order);
  Polynomial tp = Polynomial::variable(t);
  Polynomial one_minus_t = Polynomial(1L) - tp;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(tp * f);
  for (const auto& g : b) gens.push_back(one_minus_t * g);
  GroebnerBasis gb = groebner_basis(gens, elim);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements())
    if (g.leading_monomial(elim).exponent(t) == 0) kept.push_back(g);
  return reduce_gb(GroebnerBasis(std::move(kept), order, false));
}

GroebnerBasis ideal_colon(const std::vector<Polynomial>& a, const Polynomial& f, const TermOrder& order) {
  if (f.is_zero()) return GroebnerBasis({Polynomial(1L)}, order, true);
  GroebnerBasis inter = ideal_intersection(a, {f}, order);
  std::vector<Polynomial> q;
  for (const auto& g : inter.elements()) q.push_back(exact_quotient(g, f));
  return groebner_basis(q, order);
}

bool ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const TermOrder& order) {
  GroebnerBasis ga = groebner_basis(a, order);
  GroebnerBasis gb = groebner_basis(b, order);
  return ga.elements() == gb.elements();
}

int ideal_height(const GroebnerBasis& basis) {
  if (basis.is_unit()) throw PreconditionError("height of the unit ideal");
  return height(initial_ideal(basis));
}

std::optional<unsigned> radical_power(const Polynomial& f, const GroebnerBasis& basis, unsigned budget) {
  Polynomial p = f;
  for (unsigned k = 1; k <= budget; ++k) {
    if (membership(p, basis)) return k;
    p = p * f;
  }
  return std::nullopt;
}

bool is_monomial_ideal(const std::vector<Polynomial>& generators) {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& f) { return f.is_zero() || f.is_monomial(); });
}

MonomialIdeal as_monomial_ideal(const std::vector<Polynomial>& generators, std::vector<Variable> universe) {
  std::vector<Monomial> m;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (!f.is_monomial()) throw PreconditionError("generator is not a monomial");
    m.push_back(f.terms()[0].mono);
  }
  return MonomialIdeal(std::move(m), std::move(universe));
}

std::vector<Polynomial> as_polynomials(const MonomialIdeal& ideal) {
  std::vector<Polynomial> out;
  for (const auto& m : ideal.generators()) out.emplace_back(m);
  return out;
}

std::vector<Polynomial> minimal_homogeneous_generators(const std::vector<Polynomial>& generators,
                                                       const TermOrder& order) {
  std::vector<Polynomial> gens;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw PreconditionError("minimal generators require homogeneous input");
    gens.push_back(f);
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial& a, const Polynomial& b) { return a.total_degree() < b.total_degree(); });
  std::vector<Polynomial> kept;
  for (const auto& f : gens) {
    if (!kept.empty() && membership(f, groebner_basis(kept, order))) continue;
    kept.push_back(f);
  }
  return kept;
}

}  // namespace liaison
