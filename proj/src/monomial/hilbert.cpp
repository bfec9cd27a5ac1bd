#include <algorithm>
#include <map>

#include "liaison/errors.hpp"
#include "liaison/monomial_ideal.hpp"

namespace liaison {

namespace {

using Poly = std::vector<long long>;

void add_into(Poly& a, const Poly& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void taylor(const std::vector<Monomial>& g, std::size_t next, const Monomial& current, int parity, Poly& acc) {
  for (std::size_t k = next; k < g.size(); ++k) {
    Monomial l = lcm(current, g[k]);
    std::size_t d = l.degree();
    if (acc.size() <= d) acc.resize(d + 1, 0);
    acc[d] += parity ? 1 : -1;
    taylor(g, k + 1, l, !parity, acc);
  }
}

Poly numerator(const MonomialIdeal& ideal);

Poly pivot(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  if (g.empty()) return {1};
  if (ideal.is_unit()) return {};
  std::map<Variable, int> count;
  for (const auto& m : g)
    for (const auto& [v, e] : m.entries()) ++count[v];
  Variable pick{};
  int best = 1;
  for (const auto& [v, c] : count)
    if (c > best) {
      best = c;
      pick = v;
    }
  if (best == 1) {
    Poly r{1};
    for (const auto& m : g) {
      Poly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = multiply(r, f);
    }
    trim(r);
    return r;
  }
  MonomialIdeal with_var = ideal + MonomialIdeal({Monomial::of(pick)}, ideal.universe());
  MonomialIdeal quotient = colon(ideal, pick);
  Poly r = numerator(with_var);
  add_into(r, numerator(quotient), 1);
  trim(r);
  return r;
}

Poly numerator(const MonomialIdeal& ideal) {
  if (ideal.generators().size() > 15) return pivot(ideal);
  Poly acc{1};
  taylor(ideal.generators(), 0, Monomial(), 0, acc);
  trim(acc);
  return acc;
}

}  // namespace

std::vector<long long> KPolynomial::series(int upto) const {
  std::vector<long long> out(static_cast<std::size_t>(upto + 1), 0);
  // coefficients of 1/(1-t)^n
  std::vector<long long> inv(static_cast<std::size_t>(upto + 1), ambient_dim == 0 ? 0 : 1);
  if (ambient_dim == 0) inv[0] = 1;
  for (int step = 1; step < ambient_dim; ++step)
    for (int k = 1; k <= upto; ++k) inv[k] += inv[k - 1];
  for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= upto; ++i)
    for (int k = 0; k + static_cast<int>(i) <= upto; ++k) out[i + k] += numerator[i] * inv[k];
  return out;
}

namespace {

std::pair<int, std::vector<long long>> reduce_by_one_minus_t(std::vector<long long> h, int n) {
  int d = n;
  while (!h.empty() && d > 0) {
    long long at_one = 0;
    for (long long c : h) at_one += c;
    if (at_one != 0) break;
    // divide by (1 - t): q_k = sum_{j<=k} h_j
    std::vector<long long> q(h.size() - 1, 0);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < h.size(); ++k) {
      run += h[k];
      q[k] = run;
    }
    h = std::move(q);
    --d;
  }
  return {d, h};
}

}  // namespace

int KPolynomial::krull_dimension() const {
  if (numerator.empty()) return -1;
  return reduce_by_one_minus_t(numerator, ambient_dim).first;
}

long long KPolynomial::multiplicity() const {
  if (numerator.empty()) return 0;
  auto [d, h] = reduce_by_one_minus_t(numerator, ambient_dim);
  long long s = 0;
  for (long long c : h) s += c;
  return s;
}

KPolynomial k_polynomial_taylor(const MonomialIdeal& ideal) {
  Poly acc{1};
  taylor(ideal.generators(), 0, Monomial(), 0, acc);
  trim(acc);
  return {acc, static_cast<int>(ideal.universe().size())};
}

KPolynomial k_polynomial_pivot(const MonomialIdeal& ideal) {
  return {pivot(ideal), static_cast<int>(ideal.universe().size())};
}

KPolynomial k_polynomial(const MonomialIdeal& ideal) {
  return {numerator(ideal), static_cast<int>(ideal.universe().size())};
}

}  // namespace liaison
