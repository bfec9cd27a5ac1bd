#include <algorithm>

#include "liaison/errors.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/simplicial.hpp"

namespace liaison {

bool is_unmixed(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("unmixedness of the unit ideal");
  auto primes = minimal_primes(squarefree_model(ideal));
  return std::all_of(primes.begin(), primes.end(), [&](const auto& p) { return p.size() == primes[0].size(); });
}

bool is_cohen_macaulay(const MonomialIdeal& ideal, const Field& field) {
  if (ideal.is_unit()) throw PreconditionError("Cohen-Macaulayness of the unit ideal");
  MonomialIdeal model = squarefree_model(ideal);
  if (!is_unmixed(model)) return false;
  return is_cm_reisner(from_ideal(model), field);
}

bool is_G0(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("G0 requires a proper ideal");
  if (!is_unmixed(ideal)) throw PreconditionError("G0 test requires an unmixed ideal");
  for (const auto& prime : minimal_primes(ideal)) {
    auto inside = [&](Variable v) { return std::binary_search(prime.begin(), prime.end(), v); };
    std::vector<Monomial> local;
    for (const auto& g : ideal.generators()) local.push_back(g.restricted(inside));
    local = minimalize(std::move(local));
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = i + 1; j < local.size(); ++j)
        if (!coprime(local[i], local[j])) return false;
  }
  return true;
}

namespace {

// Largest universe position among the variables of m, or -1 for 1.
long max_index(const Monomial& m, const std::vector<Variable>& u) {
  long best = -1;
  for (const auto& [v, e] : m.entries()) {
    long k = std::find(u.begin(), u.end(), v) - u.begin();
    best = std::max(best, k);
  }
  return best;
}

}  // namespace

bool is_stable(const MonomialIdeal& ideal) {
  const auto& u = ideal.universe();
  for (const auto& g : ideal.generators()) {
    long m = max_index(g, u);
    if (m <= 0) continue;
    Monomial reduced = g / Monomial::of(u[m]);
    for (long i = 0; i < m; ++i)
      if (!ideal.contains(reduced * Monomial::of(u[i]))) return false;
  }
  return true;
}

bool is_strongly_stable(const MonomialIdeal& ideal) {
  const auto& u = ideal.universe();
  for (const auto& g : ideal.generators()) {
    for (const auto& [v, e] : g.entries()) {
      long j = std::find(u.begin(), u.end(), v) - u.begin();
      Monomial reduced = g / Monomial::of(v);
      for (long i = 0; i < j; ++i)
        if (!ideal.contains(reduced * Monomial::of(u[i]))) return false;
    }
  }
  return true;
}

bool is_artinian(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  for (Variable v : ideal.universe()) {
    bool pure = std::any_of(ideal.generators().begin(), ideal.generators().end(), [&](const Monomial& g) {
      return g.size() == 1 && g.entries()[0].first == v;
    });
    if (!pure) return false;
  }
  return true;
}

}  // namespace liaison
