#include <algorithm>

#include "liaison/errors.hpp"
#include "liaison/monomial_ideal.hpp"

namespace liaison {

PolarizationVector::PolarizationVector(std::map<std::int32_t, std::uint32_t> entries) : b_(std::move(entries)) {
  for (const auto& [base, b] : b_)
    if (b < 1) throw PreconditionError("polarization vector entries must be positive");
}

PolarizationVector PolarizationVector::full(const MonomialIdeal& ideal) {
  std::map<std::int32_t, std::uint32_t> b;
  for (Variable v : ideal.universe()) b[v.base] = std::max<std::uint32_t>(1, ideal.max_exponent(v));
  return PolarizationVector(std::move(b));
}

PolarizationVector PolarizationVector::from_list(const std::vector<Variable>& universe,
                                                 const std::vector<std::uint32_t>& b) {
  if (universe.size() != b.size()) throw PreconditionError("polarization vector length does not match the ring");
  std::map<std::int32_t, std::uint32_t> m;
  for (std::size_t k = 0; k < b.size(); ++k) m[universe[k].base] = b[k];
  return PolarizationVector(std::move(m));
}

std::uint32_t PolarizationVector::at(std::int32_t base, std::uint32_t fallback) const {
  auto it = b_.find(base);
  return it == b_.end() ? fallback : it->second;
}

Monomial polarize_monomial(const Monomial& m, const PolarizationVector& b) {
  std::vector<Monomial::Entry> out;
  for (const auto& [v, a] : m.entries()) {
    if (v.layer != 1) throw PreconditionError("polarization expects layer-1 variables");
    std::uint32_t bi = b.at(v.base, a);
    if (a <= bi) {
      for (std::uint32_t j = 1; j <= a; ++j) out.emplace_back(v.with_layer(static_cast<std::int32_t>(j)), 1);
    } else {
      for (std::uint32_t j = 1; j < bi; ++j) out.emplace_back(v.with_layer(static_cast<std::int32_t>(j)), 1);
      out.emplace_back(v.with_layer(static_cast<std::int32_t>(bi)), a - bi + 1);
    }
  }
  return Monomial(std::move(out));
}

std::vector<Variable> polarized_universe(const MonomialIdeal& ideal, const PolarizationVector& b) {
  std::vector<Variable> u;
  for (Variable v : ideal.universe()) {
    if (v.layer != 1) throw PreconditionError("polarization expects layer-1 variables");
    std::uint32_t e = ideal.max_exponent(v);
    std::uint32_t top = std::max<std::uint32_t>(1, std::min(e, b.at(v.base, e)));
    for (std::uint32_t j = 1; j <= top; ++j) u.push_back(v.with_layer(static_cast<std::int32_t>(j)));
  }
  return u;
}

MonomialIdeal polarize(const MonomialIdeal& ideal, const PolarizationVector& b) {
  std::vector<Monomial> g;
  for (const auto& m : ideal.generators()) g.push_back(polarize_monomial(m, b));
  return MonomialIdeal(std::move(g), polarized_universe(ideal, b));
}

MonomialIdeal polarize(const MonomialIdeal& ideal) { return polarize(ideal, PolarizationVector::full(ideal)); }

MonomialIdeal depolarize(const MonomialIdeal& ideal) {
  std::vector<Variable> u;
  for (Variable v : ideal.universe())
    if (std::find(u.begin(), u.end(), v.with_layer(1)) == u.end()) u.push_back(v.with_layer(1));
  return ideal.mapped([](Variable v) { return v.with_layer(1); }, std::move(u));
}

MonomialIdeal squarefree_model(const MonomialIdeal& ideal) {
  if (ideal.is_squarefree()) return ideal;
  std::map<std::int32_t, std::int32_t> top_layer;
  for (Variable v : ideal.universe()) top_layer[v.base] = std::max(top_layer[v.base], v.layer);
  std::map<Variable, std::vector<Variable>> fresh;
  std::vector<Variable> universe;
  for (Variable v : ideal.universe()) {
    universe.push_back(v);
    std::uint32_t e = ideal.max_exponent(v);
    for (std::uint32_t k = 2; k <= e; ++k) {
      Variable w{v.base, ++top_layer[v.base]};
      fresh[v].push_back(w);
      universe.push_back(w);
    }
  }
  std::vector<Monomial> gens;
  for (const auto& m : ideal.generators()) {
    std::vector<Monomial::Entry> out;
    for (const auto& [v, a] : m.entries()) {
      out.emplace_back(v, 1);
      for (std::uint32_t k = 2; k <= a; ++k) out.emplace_back(fresh[v][k - 2], 1);
    }
    gens.emplace_back(std::move(out));
  }
  return MonomialIdeal(std::move(gens), std::move(universe));
}

}  // namespace liaison
