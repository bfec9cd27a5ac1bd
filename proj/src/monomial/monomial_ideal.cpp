#include "liaison/monomial_ideal.hpp"

#include <algorithm>
#include <set>

#include "liaison/errors.hpp"

namespace liaison {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

std::vector<Variable> universe_union(const std::vector<Variable>& a, const std::vector<Variable>& b) {
  std::vector<Variable> out = a;
  for (Variable v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, std::vector<Variable> universe)
    : gens_(minimalize(std::move(gens))), universe_(std::move(universe)) {
  std::vector<Variable> seen;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (universe_[i] == universe_[j]) throw PreconditionError("repeated variable in universe");
  universe_ = universe_union(universe_, support());
}

MonomialIdeal MonomialIdeal::unit(std::vector<Variable> universe) {
  return MonomialIdeal({Monomial()}, std::move(universe));
}

MonomialIdeal MonomialIdeal::generated_by_variables(const std::vector<Variable>& vars,
                                                    std::vector<Variable> universe) {
  std::vector<Monomial> g;
  for (Variable v : vars) g.push_back(Monomial::of(v));
  return MonomialIdeal(std::move(g), std::move(universe));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_generated_by_variables() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.degree() == 1; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::vector<Variable> MonomialIdeal::support() const {
  std::vector<Variable> vars;
  for (const auto& g : gens_)
    for (const auto& [v, e] : g.entries()) vars.push_back(v);
  return sorted_unique(std::move(vars));
}

std::uint32_t MonomialIdeal::max_exponent(Variable v) const {
  std::uint32_t e = 0;
  for (const auto& g : gens_) e = std::max(e, g.exponent(v));
  return e;
}

MonomialIdeal MonomialIdeal::with_universe(std::vector<Variable> universe) const {
  for (Variable v : support())
    if (std::find(universe.begin(), universe.end(), v) == universe.end())
      throw PreconditionError("universe does not contain the generator support");
  MonomialIdeal r;
  r.gens_ = gens_;
  r.universe_ = std::move(universe);
  return r;
}

MonomialIdeal MonomialIdeal::mapped(const std::function<Variable(Variable)>& f,
                                    std::vector<Variable> universe) const {
  std::vector<Monomial> g;
  for (const auto& m : gens_) g.push_back(m.mapped(f));
  return MonomialIdeal(std::move(g), std::move(universe));
}

MonomialIdeal minimal_generators(std::vector<Monomial> gens, std::vector<Variable> universe) {
  return MonomialIdeal(std::move(gens), std::move(universe));
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(std::move(g), universe_union(a.universe(), b.universe()));
}

MonomialIdeal operator*(const Monomial& m, const MonomialIdeal& a) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) g.push_back(m * x);
  return MonomialIdeal(std::move(g), universe_union(a.universe(), m.support()));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) g.push_back(lcm(x, y));
  return MonomialIdeal(std::move(g), universe_union(a.universe(), b.universe()));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& x : a.generators()) g.push_back(x / gcd(x, m));
  return MonomialIdeal(std::move(g), universe_union(a.universe(), m.support()));
}

MonomialIdeal colon(const MonomialIdeal& a, Variable v) { return colon(a, Monomial::of(v)); }

namespace {

void enumerate_covers(const std::vector<std::vector<Variable>>& edges, std::vector<Variable>& chosen,
                      std::set<Variable>& forbidden, std::vector<std::vector<Variable>>& out) {
  const std::vector<Variable>* pick = nullptr;
  std::size_t best = SIZE_MAX;
  for (const auto& e : edges) {
    bool covered = std::any_of(e.begin(), e.end(), [&](Variable v) {
      return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    });
    if (covered) continue;
    std::size_t avail = 0;
    for (Variable v : e) avail += forbidden.count(v) ? 0 : 1;
    if (avail == 0) return;
    if (avail < best) {
      best = avail;
      pick = &e;
    }
  }
  if (pick == nullptr) {
    out.push_back(chosen);
    return;
  }
  std::vector<Variable> added;
  for (Variable v : *pick) {
    if (forbidden.count(v)) continue;
    chosen.push_back(v);
    enumerate_covers(edges, chosen, forbidden, out);
    chosen.pop_back();
    forbidden.insert(v);
    added.push_back(v);
  }
  for (Variable v : added) forbidden.erase(v);
}

}  // namespace

std::vector<std::vector<Variable>> minimal_primes(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {};
  std::vector<std::vector<Variable>> edges;
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  std::vector<std::vector<Variable>> covers;
  std::vector<Variable> chosen;
  std::set<Variable> forbidden;
  enumerate_covers(edges, chosen, forbidden, covers);
  for (auto& c : covers) std::sort(c.begin(), c.end());
  std::sort(covers.begin(), covers.end(),
            [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<std::vector<Variable>> minimal;
  for (const auto& c : covers) {
    bool dominated = std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
      return std::includes(c.begin(), c.end(), m.begin(), m.end());
    });
    if (!dominated) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

int height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw PreconditionError("height of the unit ideal");
  auto primes = minimal_primes(ideal);
  std::size_t h = SIZE_MAX;
  for (const auto& p : primes) h = std::min(h, p.size());
  return static_cast<int>(h);
}

int dimension(const MonomialIdeal& ideal) {
  return static_cast<int>(ideal.universe().size()) - height(ideal);
}

}  // namespace liaison
