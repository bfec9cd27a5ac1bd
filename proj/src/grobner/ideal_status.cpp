#include "liaison/ideal_status.hpp"

#include <random>

#include "liaison/errors.hpp"

namespace liaison {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Verified:
      return "verified";
    case CheckStatus::Sufficient:
      return "sufficient";
    case CheckStatus::Asserted:
      return "asserted";
    case CheckStatus::Failed:
      return "failed";
    case CheckStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

CheckStatus check_status_from_string(const std::string& s) {
  for (auto c : {CheckStatus::Verified, CheckStatus::Sufficient, CheckStatus::Asserted, CheckStatus::Failed,
                 CheckStatus::Unknown})
    if (to_string(c) == s) return c;
  throw SchemaError("unknown check status '" + s + "'");
}

bool is_positive(CheckStatus s) {
  return s == CheckStatus::Verified || s == CheckStatus::Sufficient || s == CheckStatus::Asserted;
}

CheckStatus conjunction(CheckStatus a, CheckStatus b) {
  auto rank = [](CheckStatus s) {
    switch (s) {
      case CheckStatus::Failed:
        return 0;
      case CheckStatus::Unknown:
        return 1;
      case CheckStatus::Asserted:
        return 2;
      case CheckStatus::Sufficient:
        return 3;
      case CheckStatus::Verified:
        return 4;
    }
    return 1;
  };
  return rank(a) <= rank(b) ? a : b;
}

namespace {

bool all_homogeneous(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
}

}  // namespace

std::optional<bool> cm_by_multiplicity(const GroebnerBasis& basis) {
  if (basis.is_unit()) throw PreconditionError("Cohen-Macaulay test on the unit ideal");
  if (!all_homogeneous(basis.elements())) return std::nullopt;
  const auto& vars = basis.order().variables();
  KPolynomial k = k_polynomial(initial_ideal(basis));
  int d = k.krull_dimension();
  if (d <= 0) return true;
  long long e = k.multiplicity();
  TermOrder aux = TermOrder::grevlex(vars);
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Polynomial> gens = basis.elements();
    for (int i = 0; i < d; ++i) {
      Polynomial l;
      for (Variable v : vars) l += Polynomial::variable(v) * Rational(coef(rng));
      gens.push_back(l);
    }
    GroebnerBasis g = groebner_basis(gens, aux);
    if (g.is_unit()) continue;
    KPolynomial kl = k_polynomial(initial_ideal(g));
    if (kl.krull_dimension() != 0) continue;
    return kl.multiplicity() == e;
  }
  return std::nullopt;
}

StatusResult cm_status(const std::vector<Polynomial>& generators, const TermOrder& order, const Field& field) {
  if (is_monomial_ideal(generators)) {
    MonomialIdeal m = as_monomial_ideal(generators, order.variables());
    return {is_cohen_macaulay(m, field) ? CheckStatus::Verified : CheckStatus::Failed, "Reisner"};
  }
  GroebnerBasis gb = groebner_basis(generators, order);
  if (gb.is_unit()) throw PreconditionError("Cohen-Macaulay test on the unit ideal");
  if (is_cohen_macaulay(initial_ideal(gb), field)) return {CheckStatus::Sufficient, "initial ideal"};
  if (auto r = cm_by_multiplicity(gb)) return {*r ? CheckStatus::Verified : CheckStatus::Failed, "multiplicity"};
  return {CheckStatus::Unknown, "undecided"};
}

StatusResult unmixed_status(const std::vector<Polynomial>& generators, const TermOrder& order, const Field& field) {
  if (is_monomial_ideal(generators)) {
    MonomialIdeal m = as_monomial_ideal(generators, order.variables());
    return {is_unmixed(m) ? CheckStatus::Verified : CheckStatus::Failed, "polarization"};
  }
  StatusResult cm = cm_status(generators, order, field);
  if (is_positive(cm.status)) return {CheckStatus::Sufficient, "Cohen-Macaulay (" + cm.method + ")"};
  return {CheckStatus::Unknown, "undecided"};
}

bool is_complete_intersection(const std::vector<Polynomial>& generators, const TermOrder& order) {
  if (!all_homogeneous(generators)) return false;
  GroebnerBasis gb = groebner_basis(generators, order);
  if (gb.is_unit()) return false;
  auto mins = minimal_homogeneous_generators(generators, order);
  return static_cast<int>(mins.size()) == ideal_height(gb);
}

StatusResult g0_status(const std::vector<Polynomial>& generators, const TermOrder& order) {
  if (is_monomial_ideal(generators)) {
    MonomialIdeal m = as_monomial_ideal(generators, order.variables());
    if (!is_unmixed(m)) return {CheckStatus::Unknown, "not unmixed"};
    return {is_G0(m) ? CheckStatus::Verified : CheckStatus::Failed, "localization"};
  }
  if (is_complete_intersection(generators, order)) return {CheckStatus::Sufficient, "complete intersection"};
  GroebnerBasis gb = groebner_basis(generators, order);
  if (initial_ideal(gb).is_squarefree()) return {CheckStatus::Sufficient, "radical"};
  return {CheckStatus::Unknown, "undecided"};
}

StatusResult radical_status(const std::vector<Polynomial>& generators, const TermOrder& order) {
  if (is_monomial_ideal(generators)) {
    MonomialIdeal m = as_monomial_ideal(generators, order.variables());
    return {m.is_squarefree() ? CheckStatus::Verified : CheckStatus::Failed, "squarefree"};
  }
  GroebnerBasis gb = groebner_basis(generators, order);
  if (initial_ideal(gb).is_squarefree()) return {CheckStatus::Sufficient, "squarefree initial ideal"};
  const auto& vars = order.variables();
  if (vars.size() <= 8) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::vector<Variable> rotated{vars[i]};
      for (std::size_t j = 0; j < vars.size(); ++j)
        if (j != i) rotated.push_back(vars[j]);
      TermOrder lex = TermOrder::lex(rotated);
      if (initial_ideal(groebner_basis(generators, lex)).is_squarefree())
        return {CheckStatus::Sufficient, "squarefree initial ideal under " + lex.describe()};
    }
  }
  return {CheckStatus::Unknown, "undecided"};
}

}  // namespace liaison
