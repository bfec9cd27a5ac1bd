#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "liaison/errors.hpp"
#include "liaison/field.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/term_order.hpp"

using namespace liaison;

namespace {

Monomial random_monomial(std::mt19937& rng, const std::vector<Variable>& vars, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial::Entry> entries;
  for (Variable v : vars) {
    int k = e(rng);
    if (k) entries.emplace_back(v, static_cast<std::uint32_t>(k));
  }
  return Monomial(entries);
}

Polynomial random_poly(std::mt19937& rng, const std::vector<Variable>& vars, int terms) {
  std::uniform_int_distribution<int> c(-5, 5);
  Polynomial f;
  for (int i = 0; i < terms; ++i) f += Polynomial(random_monomial(rng, vars, 2), Rational(c(rng)));
  return f;
}

}  // namespace

TEST_CASE("monomial divisibility, lcm and gcd") {
  fixture::Ring R("ring x_1, x_2, y_1, y, t, z lex");
  CHECK(divides(R.m("x_1*x_2"), R.m("x_1*x_2*y_1")));
  CHECK_FALSE(divides(R.m("y^2"), R.m("y")));
  CHECK(divides(Monomial(), R.m("y*t")));
  CHECK(lcm(R.m("x_1^2"), R.m("x_1*x_2")) == R.m("x_1^2*x_2"));
  CHECK(lcm(R.m("y*t"), Monomial()) == R.m("y*t"));
  CHECK(lcm(R.m("y*t"), R.m("z^2")) == R.m("y*t*z^2"));
  CHECK(gcd(R.m("y^2*t"), R.m("y*z")) == R.m("y"));
  CHECK(coprime(R.m("y*t"), R.m("z^2")));
  CHECK((R.m("y^3*t") / R.m("y*t")) == R.m("y^2"));
  CHECK(R.m("y*t").degree() == 2);
  CHECK(R.m("y*t").is_squarefree());
  CHECK_FALSE(R.m("y^2").is_squarefree());
}

TEST_CASE("lcm agrees with a componentwise maximum over random monomials") {
  std::mt19937 rng(11);
  std::vector<Variable> vars{{1, 1}, {2, 1}, {3, 1}, {4, 1}};
  for (int i = 0; i < 200; ++i) {
    Monomial a = random_monomial(rng, vars, 4), b = random_monomial(rng, vars, 4);
    Monomial l = lcm(a, b), g = gcd(a, b);
    for (Variable v : vars) {
      CHECK(l.exponent(v) == std::max(a.exponent(v), b.exponent(v)));
      CHECK(g.exponent(v) == std::min(a.exponent(v), b.exponent(v)));
    }
    CHECK(l * g == a * b);
    CHECK(divides(a, l));
    CHECK(divides(g, b));
  }
}

TEST_CASE("polynomial arithmetic") {
  fixture::Ring R("ring y, z, t, r lex");
  CHECK(R.p("(y - z)*(y + z)") == R.p("y^2 - z^2"));
  Polynomial f = R.p("y*t - z^2");
  CHECK((f + (-f)).is_zero());
  CHECK(f * R.p("r") == R.p("y*t*r - z^2*r"));
  CHECK(R.p("3/6*y") == R.p("1/2*y"));
  CHECK(R.p("(y+z)^3").total_degree() == 3);
  CHECK(R.p("(y+z)^3").is_homogeneous());
  CHECK_FALSE(R.p("y^2 + z").is_homogeneous());
  CHECK(R.p("0").is_zero());
  CHECK(R.p("y - y").is_zero());
}

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937 rng(0x5eed);
  std::vector<Variable> vars{{1, 1}, {2, 1}, {3, 1}};
  for (int i = 0; i < 100; ++i) {
    Polynomial a = random_poly(rng, vars, 3), b = random_poly(rng, vars, 3), c = random_poly(rng, vars, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
    CHECK(a * Polynomial(1) == a);
    CHECK(a.pow(2) == a * a);
  }
}

TEST_CASE("deg_y, in_y and depolarization") {
  fixture::Ring R("ring y, a, b, c, d lex");
  Variable y = R.v("y");
  CHECK(deg_y(R.p("y^2*a + y*d^2"), y) == 2);
  CHECK(deg_y(R.p("c*d^2"), y) == 0);
  CHECK(deg_y(Polynomial(), y) == kNegInfinity);
  CHECK(in_y(R.p("y^2*c + b^3"), y) == R.p("y^2*c"));
  CHECK(in_y(R.p("c*d^2 + a"), y) == R.p("c*d^2 + a"));

  fixture::Ring S("ring x_11, x_12, x_21, x_22 lex");
  CHECK(in_y(S.p("x_11*x_22 - x_12*x_21"), S.v("x_11")) == S.p("x_11*x_22"));

  Variable yp = y.with_layer(2);
  CHECK(depol(Monomial::of(y) * Monomial::of(yp), y, yp) == Monomial::of(y, 2));
  CHECK(depol(R.m("a*b"), y, yp) == R.m("a*b"));
  fixture::Ring X("ring x, x', z, y lex");
  CHECK(depol(X.p("x*x' - z*y"), X.v("x"), X.v("x'")) == X.p("x^2 - z*y"));
}

TEST_CASE("term order examples") {
  fixture::Ring R("ring y, z lex");
  Variable y = R.v("y"), z = R.v("z"), yp = y.with_layer(2);
  TermOrder base = TermOrder::lex({y, z});
  TermOrder ind = TermOrder::induced(base, y, yp);
  CHECK(ind.compare(Monomial::of(y) * Monomial::of(yp), Monomial::of(z, 2)) > 0);
  Variable x{7, 1};
  TermOrder base2 = TermOrder::lex({y, x, z});
  TermOrder ind2 = TermOrder::induced(base2, y, yp);
  CHECK(ind2.compare(Monomial::of(y) * Monomial::of(x), Monomial::of(yp) * Monomial::of(x)) > 0);
  CHECK(ind2.compare(Monomial::of(x), Monomial::of(x)) == 0);
  CHECK(ind2.variables() == std::vector<Variable>{y, yp, x, z});

  TermOrder g = TermOrder::grevlex({y, z, x});
  CHECK(g.compare(Monomial::of(y) * Monomial::of(x), Monomial::of(z, 2)) < 0);
  CHECK(g.compare(Monomial::of(y, 3), Monomial::of(z, 2)) > 0);
  TermOrder p = TermOrder::product({x}, TermOrder::grevlex({y, z}));
  CHECK(p.compare(Monomial::of(x), Monomial::of(y, 5)) > 0);
  CHECK_THROWS_AS(TermOrder::product({y}, TermOrder::lex({y, z})), PreconditionError);
  CHECK_THROWS_AS(TermOrder::lex({y, z}).compare(Monomial::of(x), Monomial()), PreconditionError);
}

TEST_CASE("term order axioms hold for every order kind") {
  std::vector<Variable> vars{{1, 1}, {2, 1}, {3, 1}, {4, 1}};
  Variable yp{1, 2};
  std::vector<Variable> with_prime{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {4, 1}};
  std::vector<std::pair<TermOrder, std::vector<Variable>>> orders{
      {TermOrder::lex(vars), vars},
      {TermOrder::grevlex(vars), vars},
      {TermOrder::product({vars[2]}, TermOrder::grevlex({vars[0], vars[1], vars[3]})), vars},
      {TermOrder::induced(TermOrder::lex(vars), vars[0], yp), with_prime},
      {TermOrder::induced(TermOrder::grevlex(vars), vars[0], yp), with_prime},
  };
  std::mt19937 rng(2024);
  for (const auto& [order, vs] : orders) {
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_monomial(rng, vs, 3), b = random_monomial(rng, vs, 3), c = random_monomial(rng, vs, 3);
      auto ab = order.compare(a, b), ba = order.compare(b, a);
      CHECK((ab < 0) == (ba > 0));
      CHECK((ab == 0) == (a == b));
      CHECK(order.compare(a * c, b * c) == ab);
      CHECK(order.compare(Monomial(), a) <= 0);
      if (ab < 0 && order.compare(b, c) < 0) CHECK(order.compare(a, c) < 0);
    }
  }
}

TEST_CASE("order restriction and variable insertion keep the shape") {
  std::vector<Variable> vars{{1, 1}, {2, 1}, {3, 1}};
  TermOrder p = TermOrder::product({vars[1]}, TermOrder::lex({vars[0], vars[2]}));
  TermOrder q = p.with_variable_after(Variable{2, 2}, vars[1]);
  CHECK(q.kind() == TermOrder::Kind::Product);
  CHECK(q.front() == std::vector<Variable>{vars[1], Variable{2, 2}});
  TermOrder r = p.restricted_to({vars[0], vars[2]});
  CHECK(r.kind() == TermOrder::Kind::Lex);
  CHECK(r.variables() == std::vector<Variable>{vars[0], vars[2]});
}

TEST_CASE("rationals and fields") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("Fp:7").p == 7);
  CHECK_THROWS(Field::parse("Fp:8"));
}
