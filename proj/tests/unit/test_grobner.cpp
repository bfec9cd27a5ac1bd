#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "liaison/errors.hpp"
#include "liaison/ideal_status.hpp"
#include "oracles.hpp"

using namespace liaison;

namespace {

Polynomial random_form(std::mt19937& rng, const std::vector<Variable>& vars, int degree, int terms) {
  std::uniform_int_distribution<int> c(-3, 3);
  auto exps = oracle::monomials_of_degree(static_cast<int>(vars.size()), degree);
  Polynomial f;
  for (int i = 0; i < terms; ++i) {
    const auto& e = exps[rng() % exps.size()];
    std::vector<Monomial::Entry> entries;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (e[k]) entries.emplace_back(vars[k], static_cast<std::uint32_t>(e[k]));
    f += Polynomial(Monomial(entries), Rational(c(rng)));
  }
  return f;
}

std::vector<Polynomial> random_homogeneous_ideal(std::mt19937& rng, const std::vector<Variable>& vars) {
  std::vector<Polynomial> gens;
  int count = 2 + static_cast<int>(rng() % 2);
  for (int i = 0; i < count; ++i) {
    Polynomial f = random_form(rng, vars, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3));
    if (!f.is_zero()) gens.push_back(f);
  }
  return gens;
}

std::vector<Variable> plain_vars(int n) {
  std::vector<Variable> v;
  for (int i = 1; i <= n; ++i) v.push_back({i, 1});
  return v;
}

}  // namespace

TEST_CASE("division and s-polynomials") {
  fixture::Ring R("ring y, x, z, r, s, t lex");
  auto o = R.order();
  Polynomial f = R.p("y^2 - x*z");
  std::vector<Polynomial> one{f};
  auto q = divide(f, one, o);
  CHECK(q.remainder.is_zero());
  CHECK(q.quotients[0] == Polynomial(1));
  CHECK(s_polynomial(f, f, o).is_zero());
  auto g = R.ideal("y^2 - x*z, y*r - s*t");
  auto h = R.p("y*r*x + 3*y^2 - s*t*x");
  auto d = divide(h, g, o);
  Polynomial recon = d.remainder;
  for (std::size_t i = 0; i < g.size(); ++i) recon += d.quotients[i] * g[i];
  CHECK(recon == h);
  for (const auto& t : d.remainder.terms())
    for (const auto& gi : g) CHECK_FALSE(divides(gi.leading_monomial(o), t.mono));
}

TEST_CASE("reduced basis under a lex order with the last variable smallest") {
  fixture::Ring R("ring y, x, w, z, t lex");
  auto o = R.order();
  auto G = groebner_basis(R.ideal("y^2*x + y^2*z, y*w - y*z + t^2"), o);
  auto expected = R.ideal("x*t^4 + z*t^4, y*w - y*z + t^2, y*x*t^2 + y*z*t^2, y^2*x + y^2*z");
  CHECK(fixture::monic_sorted(G.elements(), o) == fixture::monic_sorted(expected, o));
  CHECK(G.is_reduced());
  CHECK(is_groebner_basis(G.elements(), o));
  // Swapping w and z changes the reduced basis.
  fixture::Ring Q("ring y, x, z, w, t lex");
  auto H = groebner_basis(Q.ideal("y^2*x + y^2*z, y*w - y*z + t^2"), Q.order());
  auto expected2 = Q.ideal("z*t^4 + x*t^4, y*w*t^2 + y*x*t^2 + t^4, y*z - y*w - t^2, y^2*w + y^2*x + y*t^2");
  CHECK(fixture::monic_sorted(H.elements(), Q.order()) == fixture::monic_sorted(expected2, Q.order()));
}

TEST_CASE("monomial generators are their own basis") {
  fixture::Ring R("ring x, y, z grevlex");
  auto G = groebner_basis(R.ideal("x^2, x^3, x*y, y*z^2"), R.order());
  CHECK(fixture::monic_sorted(G.elements(), R.order()) == fixture::monic_sorted(R.ideal("x^2, x*y, y*z^2"), R.order()));
}

TEST_CASE("2x3 minors: initial ideal and Hilbert series") {
  fixture::Ring R("ring x_11, x_12, x_13, x_21, x_22, x_23 lex");
  auto o = R.order();
  auto I = R.ideal("x_11*x_22 - x_12*x_21, x_11*x_23 - x_13*x_21, x_12*x_23 - x_13*x_22");
  auto G = groebner_basis(I, o);
  auto in = initial_ideal(G);
  CHECK(in.contains(R.m("x_11*x_22")));
  CHECK(in.contains(R.m("x_11*x_23")));
  CHECK(in.contains(R.m("x_12*x_23")));
  auto K = hilbert_series_quotient(I, o);
  CHECK(K.numerator == std::vector<long long>{1, 0, -3, 2});
  CHECK(K.series(6) == oracle::hilbert_function(I, R.variables(), 6));
  CHECK(ideal_height(G) == 2);
  CHECK(is_positive(cm_status(I, o).status));
  CHECK_FALSE(is_complete_intersection(I, o));
}

TEST_CASE("principal ideals have numerator 1 - t^d") {
  fixture::Ring R("ring x, y, z grevlex");
  auto K = hilbert_series_quotient(R.ideal("x^3 + y*z^2 - 2*z^3"), R.order());
  CHECK(K.numerator == std::vector<long long>{1, 0, 0, -1});
  CHECK(is_complete_intersection(R.ideal("x^3 + y*z^2 - 2*z^3"), R.order()));
  CHECK_THROWS_AS(hilbert_series_quotient(R.ideal("x^2 + y"), R.order()), PreconditionError);
}

TEST_CASE("membership") {
  fixture::Ring R("ring y, x, z, r, s, t lex");
  auto o = R.order();
  auto G = groebner_basis(R.ideal("y^2 - x*z, y*r - s*t"), o);
  CHECK(membership(R.p("y*s*t - r*x*z"), G));
  CHECK(membership(R.p("(y^2 - x*z)*(y*r - s*t + x)"), G));
  CHECK_FALSE(membership(R.p("s*t"), G));
  CHECK(oracle::member(R.p("y*s*t - r*x*z"), R.ideal("y^2 - x*z, y*r - s*t"), R.variables(), 3));
  CHECK_FALSE(oracle::member(R.p("s*t"), R.ideal("y^2 - x*z, y*r - s*t"), R.variables(), 2));
}

TEST_CASE("y-compatibility") {
  fixture::Ring R("ring x, y grevlex");
  auto o = R.order();
  GroebnerBasis G({R.p("x^2 + y^2")}, o, true);
  CHECK_FALSE(is_y_compatible(o, G, R.v("y")));
  CHECK(is_y_compatible(o, G, R.v("x")));
  GroebnerBasis H({R.p("x^3")}, o, true);
  fixture::Ring S("ring x, y, z grevlex");
  GroebnerBasis N({S.p("x^2 - z^2")}, S.order(), true);
  CHECK(is_y_compatible(S.order(), N, S.v("y")));
  CHECK(is_y_compatible_global(TermOrder::lex({R.v("y"), R.v("x")}), R.v("y")));
  CHECK_FALSE(is_y_compatible_global(TermOrder::lex({R.v("x"), R.v("y")}), R.v("y")));
  CHECK(is_y_compatible_global(TermOrder::product({R.v("y")}, TermOrder::grevlex({R.v("x")})), R.v("y")));
}

TEST_CASE("self-audit of Buchberger output on random homogeneous ideals") {
  std::mt19937 rng(0x5eed);
  auto vars = plain_vars(3);
  std::vector<TermOrder> orders{TermOrder::lex(vars), TermOrder::grevlex(vars),
                                TermOrder::product({vars[1]}, TermOrder::grevlex({vars[0], vars[2]}))};
  for (int i = 0; i < 30; ++i) {
    auto gens = random_homogeneous_ideal(rng, vars);
    if (gens.empty()) continue;
    const auto& o = orders[static_cast<std::size_t>(i) % orders.size()];
    BuchbergerStats with, without;
    auto G = buchberger(gens, o, {}, &with);
    auto G2 = buchberger(gens, o, {false}, &without);
    CHECK(is_groebner_basis(G.elements(), o));
    auto R1 = reduce_gb(G), R2 = reduce_gb(G2);
    CHECK(R1.elements() == R2.elements());
    CHECK(contains_all(R1, gens));
    for (const auto& g : R1.elements())
      CHECK(oracle::member(g, gens, vars, static_cast<int>(g.total_degree())));
    // Macaulay: R/I and R/in(I) share a Hilbert function.
    auto in = initial_ideal(R1);
    CHECK(oracle::hilbert_function(in, 6) == oracle::hilbert_function(gens, vars, 6));
  }
}

TEST_CASE("ideal intersection and colon against linear algebra") {
  fixture::Ring R("ring x, y, z grevlex");
  auto o = R.order();
  auto a = R.ideal("x*y, z^2");
  auto b = R.ideal("x^2 - y*z");
  auto inter = ideal_intersection(a, b, o);
  for (const auto& g : inter.elements()) {
    CHECK(membership(g, groebner_basis(a, o)));
    CHECK(membership(g, groebner_basis(b, o)));
  }
  CHECK(membership(R.p("(x^2 - y*z)*z^2"), inter));
  auto col = ideal_colon(R.ideal("x*y, x*z"), R.p("x"), o);
  CHECK(ideals_equal(col.elements(), R.ideal("y, z"), o));
  CHECK(exact_quotient(R.p("x^2 - y^2"), R.p("x - y")) == R.p("x + y"));
  CHECK(radical_power(R.p("x"), groebner_basis(R.ideal("x^3"), o)) == std::optional<unsigned>(3));
  CHECK_FALSE(radical_power(R.p("y"), groebner_basis(R.ideal("x^3"), o)).has_value());
}

TEST_CASE("status ladder") {
  fixture::Ring R("ring w, x, y, z lex");
  auto o = R.order();
  auto C = R.ideal("y*z - x^2, z^2, x*z");
  CHECK(is_positive(unmixed_status(C, o).status));
  CHECK(is_positive(cm_status(C, o).status));
  CHECK(radical_status(R.ideal("y*z - x^2"), o).status == CheckStatus::Sufficient);
  CHECK(g0_status(R.ideal("y*z - x^2"), o).status == CheckStatus::Sufficient);
  CHECK(radical_status(R.ideal("x^2, y"), o).status == CheckStatus::Failed);
  CHECK(cm_status(R.ideal("x*y, z*w"), o).status == CheckStatus::Verified);
  CHECK(cm_status(R.ideal("x*y, x*z"), o).status == CheckStatus::Failed);
  CHECK(conjunction(CheckStatus::Verified, CheckStatus::Sufficient) == CheckStatus::Sufficient);
  CHECK(conjunction(CheckStatus::Asserted, CheckStatus::Unknown) == CheckStatus::Unknown);
  CHECK(conjunction(CheckStatus::Unknown, CheckStatus::Failed) == CheckStatus::Failed);
  CHECK(check_status_from_string("asserted") == CheckStatus::Asserted);
}

TEST_CASE("Cohen-Macaulay status agrees with a regular-sequence oracle") {
  std::mt19937 rng(77);
  auto vars = plain_vars(3);
  auto o = TermOrder::grevlex(vars);
  int decided = 0;
  for (int i = 0; i < 25; ++i) {
    auto gens = random_homogeneous_ideal(rng, vars);
    if (gens.empty()) continue;
    auto G = groebner_basis(gens, o);
    if (G.is_unit() || G.is_zero()) continue;
    auto rep = oracle::depth_by_regular_sequence(gens, vars, 500 + i, 9);
    CHECK(ideal_height(G) == 3 - rep.dimension);
    auto st = cm_status(gens, o);
    if (st.status == CheckStatus::Verified || st.status == CheckStatus::Failed) {
      CHECK((st.status == CheckStatus::Verified) == rep.cohen_macaulay());
      ++decided;
    } else if (st.status == CheckStatus::Sufficient) {
      CHECK(rep.cohen_macaulay());
      ++decided;
    }
  }
  CHECK(decided > 10);
}

TEST_CASE("minimal homogeneous generators") {
  fixture::Ring R("ring x, y, z grevlex");
  auto gens = R.ideal("x^2, x*y, x^2 + x*y, x^2*z");
  CHECK(minimal_homogeneous_generators(gens, R.order()).size() == 2);
}
