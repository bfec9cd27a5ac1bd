#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixture {

using namespace liaison;

Ring::Ring(const std::string& declaration) : doc(io::parse(declaration + ";")), declared_(doc.variables) {}

Variable Ring::v(const std::string& name) const {
  auto r = doc.names.resolve(name);
  if (!r) throw std::logic_error("fixture: unknown variable " + name);
  return *r;
}

std::vector<Variable> Ring::vs(const std::vector<std::string>& names) const {
  std::vector<Variable> out;
  for (const auto& n : names) out.push_back(v(n));
  return out;
}

Polynomial Ring::p(const std::string& text) { return io::parse_polynomial(text, doc); }

std::vector<Polynomial> Ring::ideal(const std::string& text) {
  std::vector<Polynomial> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.find_first_not_of(" \t\n") != std::string::npos) out.push_back(p(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0)
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

MonomialIdeal Ring::mono(const std::string& text) {
  auto gens = ideal(text);
  return as_monomial_ideal(gens, declared_);
}

MonomialIdeal Ring::mono(const std::string& text, const std::vector<Variable>& universe) {
  return as_monomial_ideal(ideal(text), universe);
}

Monomial Ring::m(const std::string& text) {
  Polynomial f = p(text);
  if (!f.is_monomial()) throw std::logic_error("fixture: not a monomial: " + text);
  return f.terms().front().mono;
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const TermOrder& order) {
  return ideals_equal(a, b, order);
}

std::vector<Polynomial> monic_sorted(std::vector<Polynomial> gens, const TermOrder& order) {
  for (auto& g : gens) g = g.monic(order);
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(order), b.leading_monomial(order)) < 0;
  });
  return gens;
}

std::vector<Variable> plain_variables(int n) {
  std::vector<Variable> v;
  for (int i = 1; i <= n; ++i) v.push_back({i, 1});
  return v;
}

namespace {

Monomial random_monomial(std::mt19937& rng, const std::vector<Variable>& vars, int max_exp, int max_degree) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial::Entry> entries;
  int degree = 0;
  for (Variable v : vars) {
    int k = std::min(e(rng), max_degree - degree);
    degree += k;
    if (k > 0) entries.emplace_back(v, static_cast<std::uint32_t>(k));
  }
  return Monomial(entries);
}

// Largest index variable dividing u.
std::size_t max_index(const Monomial& u, const std::vector<Variable>& vars) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (u.exponent(vars[i])) m = i;
  return m;
}

}  // namespace

MonomialIdeal random_stable_cm_ideal(std::mt19937& rng, int n) {
  auto vars = plain_variables(n);
  int h = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
  std::vector<Variable> front(vars.begin(), vars.begin() + h);
  std::vector<Monomial> gens;
  gens.push_back(Monomial::of(front.back(), 1 + static_cast<std::uint32_t>(rng() % 3)));
  int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i) {
    Monomial m = random_monomial(rng, front, 3, 3);
    if (!m.is_one()) gens.push_back(m);
  }
  for (bool changed = true; changed;) {
    changed = false;
    MonomialIdeal I(gens, vars);
    for (const auto& u : I.generators()) {
      std::size_t m = max_index(u, vars);
      for (std::size_t i = 0; i < m; ++i) {
        Monomial w = u / Monomial::of(vars[m]) * Monomial::of(vars[i]);
        if (!I.contains(w)) {
          gens.push_back(w);
          changed = true;
        }
      }
    }
  }
  return MonomialIdeal(gens, vars);
}

MonomialIdeal random_artinian_ideal(std::mt19937& rng, int n) {
  auto vars = plain_variables(n);
  std::vector<Monomial> gens;
  for (Variable v : vars) gens.push_back(Monomial::of(v, 1 + static_cast<std::uint32_t>(rng() % 3)));
  int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i) {
    Monomial m = random_monomial(rng, vars, 3, 12);
    if (!m.is_one()) gens.push_back(m);
  }
  return MonomialIdeal(gens, vars);
}

MonomialIdeal random_monomial_ideal(std::mt19937& rng, int n, int count, int max_exp) {
  auto vars = plain_variables(n);
  std::vector<Monomial> gens;
  for (int i = 0; i < count; ++i) {
    Monomial m = random_monomial(rng, vars, max_exp, 1000);
    if (!m.is_one()) gens.push_back(m);
  }
  return MonomialIdeal(gens, vars);
}

}  // namespace fixture
