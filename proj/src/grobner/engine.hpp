#pragma once

#include <vector>

#include "liaison/polynomial.hpp"
#include "liaison/term_order.hpp"

namespace liaison::detail {

// Terms sorted strictly descending under a fixed term order.
using Sorted = std::vector<Term>;

Sorted to_sorted(const Polynomial& f, const TermOrder& order);
Polynomial from_sorted(Sorted terms);

// p[from..] - c * m * g, result sorted; g sorted under the same order.
Sorted sub_scaled(const Sorted& p, std::size_t from, const Rational& c, const Monomial& m, const Sorted& g,
                  const TermOrder& order);

// Full reduction of f by divisors; quotients optional.
Sorted reduce(Sorted f, const std::vector<Sorted>& divisors, const TermOrder& order,
              std::vector<Sorted>* quotients = nullptr);

void make_monic(Sorted& f);

}  // namespace liaison::detail
