#include "engine.hpp"
#include "liaison/errors.hpp"
#include "liaison/groebner.hpp"

namespace liaison {

namespace detail {

Sorted to_sorted(const Polynomial& f, const TermOrder& order) { return f.sorted(order); }

Polynomial from_sorted(Sorted terms) { return Polynomial::from_terms(std::move(terms)); }

Sorted sub_scaled(const Sorted& p, std::size_t from, const Rational& c, const Monomial& m, const Sorted& g,
                  const TermOrder& order) {
  Sorted out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    if (i == p.size()) {
      out.push_back({-(c * g[j].coef), std::move(gm)});
      ++j;
      continue;
    }
    auto cmp = order.compare_unchecked(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({-(c * g[j].coef), std::move(gm)});
      ++j;
    } else {
      Rational x = p[i].coef - c * g[j].coef;
      if (x != 0) out.push_back({std::move(x), p[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

Sorted reduce(Sorted f, const std::vector<Sorted>& divisors, const TermOrder& order, std::vector<Sorted>* quotients) {
  if (quotients) quotients->assign(divisors.size(), {});
  Sorted remainder;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term& lt = f[start];
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Sorted& g = divisors[k];
      if (g.empty() || !divides(g.front().mono, lt.mono)) continue;
      Rational c = lt.coef / g.front().coef;
      Monomial m = lt.mono / g.front().mono;
      if (quotients) (*quotients)[k].push_back({c, m});
      f = sub_scaled(f, start, c, m, g, order);
      start = 0;
      reduced = true;
      break;
    }
    if (!reduced) remainder.push_back(f[start++]);
  }
  return remainder;
}

void make_monic(Sorted& f) {
  if (f.empty() || f.front().coef == 1) return;
  Rational inv = 1 / f.front().coef;
  for (auto& t : f) t.coef *= inv;
}

}  // namespace detail

StandardExpression divide(const Polynomial& f, std::span<const Polynomial> divisors, const TermOrder& order) {
  std::vector<detail::Sorted> ds;
  for (const auto& g : divisors) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    ds.push_back(detail::to_sorted(g, order));
  }
  std::vector<detail::Sorted> qs;
  auto r = detail::reduce(detail::to_sorted(f, order), ds, order, &qs);
  StandardExpression out;
  for (auto& q : qs) out.quotients.push_back(detail::from_sorted(std::move(q)));
  out.remainder = detail::from_sorted(std::move(r));
  return out;
}

Polynomial s_polynomial(const Polynomial& g, const Polynomial& h, const TermOrder& order) {
  if (g.is_zero() || h.is_zero()) throw PreconditionError("s-polynomial of a zero polynomial");
  const Term& a = g.leading_term(order);
  const Term& b = h.leading_term(order);
  Monomial l = lcm(a.mono, b.mono);
  return g * (l / a.mono) * Rational(1 / a.coef) - h * (l / b.mono) * Rational(1 / b.coef);
}

}  // namespace liaison
