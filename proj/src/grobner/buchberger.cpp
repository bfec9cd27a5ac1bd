#include <algorithm>
#include <set>

#include "engine.hpp"
#include "liaison/errors.hpp"
#include "liaison/groebner.hpp"

namespace liaison {

using detail::Sorted;

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial(order_));
  return out;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

std::vector<Sorted> prepare(const std::vector<Polynomial>& gens, const TermOrder& order, bool& unit) {
  std::vector<Sorted> g;
  unit = false;
  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Sorted s = detail::to_sorted(f, order);
    detail::make_monic(s);
    if (s.front().mono.is_one()) unit = true;
    g.push_back(std::move(s));
  }
  return g;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order, BuchbergerOptions options,
                         BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  bool unit = false;
  std::vector<Sorted> g = prepare(generators, order, unit);
  if (unit) return GroebnerBasis({Polynomial(1L)}, order, true);

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lcm(g[i].front().mono, g[k].front().mono)});
      pending_set.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs(k);

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      auto da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) {
        if (da < db) best = k;
        continue;
      }
      auto c = order.compare_unchecked(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.i, a.j) < std::pair(b.i, b.j))) best = k;
    }
    Pair p = pending[best];
    pending[best] = pending.back();
    pending.pop_back();
    ++st.pairs_considered;

    const Monomial& li = g[p.i].front().mono;
    const Monomial& lj = g[p.j].front().mono;
    bool skip = false;
    if (coprime(li, lj)) {
      ++st.coprime_skipped;
      skip = true;
    } else if (options.chain_criterion) {
      for (std::size_t k = 0; k < g.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (!divides(g[k].front().mono, p.lcm)) continue;
        auto key = [](std::size_t a, std::size_t b) { return std::pair(std::min(a, b), std::max(a, b)); };
        if (!pending_set.count(key(p.i, k)) && !pending_set.count(key(p.j, k))) skip = true;
      }
      if (skip) ++st.chain_skipped;
    }
    if (!skip) {
      Sorted s = g[p.i];
      Monomial mi = p.lcm / li;
      for (auto& t : s) t.mono *= mi;
      s = detail::sub_scaled(s, 0, Rational(1), p.lcm / lj, g[p.j], order);
      s = detail::reduce(std::move(s), g, order);
      if (s.empty()) {
        ++st.reductions_to_zero;
      } else {
        detail::make_monic(s);
        if (s.front().mono.is_one()) {
          pending_set.erase({p.i, p.j});
          return GroebnerBasis({Polynomial(1L)}, order, true);
        }
        g.push_back(std::move(s));
        add_pairs(g.size() - 1);
      }
    }
    pending_set.erase({p.i, p.j});
  }
  std::vector<Polynomial> out;
  for (auto& s : g) out.push_back(detail::from_sorted(std::move(s)));
  return GroebnerBasis(std::move(out), order, false);
}

GroebnerBasis reduce_gb(const GroebnerBasis& basis) {
  const TermOrder& order = basis.order();
  bool unit = false;
  std::vector<Sorted> g = prepare(basis.elements(), order, unit);
  if (unit) return GroebnerBasis({Polynomial(1L)}, order, true);
  std::sort(g.begin(), g.end(),
            [&](const Sorted& a, const Sorted& b) { return order.compare_unchecked(a.front().mono, b.front().mono) < 0; });
  std::vector<Sorted> minimal;
  for (auto& s : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Sorted& m) { return divides(m.front().mono, s.front().mono); });
    if (!redundant) minimal.push_back(std::move(s));
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Sorted> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != k) others.push_back(minimal[j]);
    Sorted head{minimal[k].front()};
    Sorted tail(minimal[k].begin() + 1, minimal[k].end());
    Sorted r = detail::reduce(std::move(tail), others, order);
    head.insert(head.end(), r.begin(), r.end());
    minimal[k] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Sorted& a, const Sorted& b) { return order.compare_unchecked(a.front().mono, b.front().mono) > 0; });
  std::vector<Polynomial> out;
  for (auto& s : minimal) out.push_back(detail::from_sorted(std::move(s)));
  return GroebnerBasis(std::move(out), order, true);
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators, const TermOrder& order) {
  return reduce_gb(buchberger(generators, order));
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  return MonomialIdeal(basis.leading_monomials(), basis.order().variables());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  std::vector<Sorted> ds;
  for (const auto& g : basis.elements()) ds.push_back(detail::to_sorted(g, basis.order()));
  return detail::from_sorted(detail::reduce(detail::to_sorted(f, basis.order()), ds, basis.order()));
}

bool membership(const Polynomial& f, const GroebnerBasis& basis) { return normal_form(f, basis).is_zero(); }

bool contains_all(const GroebnerBasis& basis, const std::vector<Polynomial>& polys) {
  return std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return membership(f, basis); });
}

bool is_groebner_basis(const std::vector<Polynomial>& elements, const TermOrder& order) {
  std::vector<Sorted> ds;
  for (const auto& g : elements)
    if (!g.is_zero()) ds.push_back(detail::to_sorted(g, order));
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (coprime(ds[i].front().mono, ds[j].front().mono)) continue;
      Polynomial s = s_polynomial(detail::from_sorted(ds[i]), detail::from_sorted(ds[j]), order);
      if (!detail::reduce(detail::to_sorted(s, order), ds, order).empty()) return false;
    }
  return true;
}

bool is_y_compatible(const TermOrder& order, const GroebnerBasis& basis, Variable y) {
  if (!order.contains(y)) throw PreconditionError("y outside the term order universe");
  return std::all_of(basis.elements().begin(), basis.elements().end(), [&](const Polynomial& g) {
    return g.leading_monomial(order) == in_y(g, y).leading_monomial(order);
  });
}

bool is_y_compatible_global(const TermOrder& order, Variable y) {
  switch (order.kind()) {
    case TermOrder::Kind::Lex:
      return !order.variables().empty() && order.variables().front() == y;
    case TermOrder::Kind::Product:
      return order.front().front() == y;
    case TermOrder::Kind::Induced:
      return order.y() == y && is_y_compatible_global(order.base(), y);
    default:
      return false;
  }
}

KPolynomial hilbert_series_quotient(const std::vector<Polynomial>& generators, const TermOrder& order) {
  for (const auto& f : generators)
    if (!f.is_homogeneous()) throw PreconditionError("Hilbert series requires homogeneous generators");
  return k_polynomial(initial_ideal(groebner_basis(generators, order)));
}

}  // namespace liaison
