// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "liaison/bdl.hpp"
#include "liaison/errors.hpp"
#include "liaison/geometric.hpp"
#include "liaison/ideal_status.hpp"
#include "liaison/io/certificate.hpp"
#include "oracles.hpp"

using namespace liaison;

namespace {

struct Report {
  std::vector<std::string> failures;
  std::string summary;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

oracle::Facets facets_of(const SimplicialComplex& D) {
  oracle::Facets out;
  const auto& u = D.universe();
  for (const auto& f : D.facet_sets()) {
    std::vector<int> face;
    for (Variable v : f) face.push_back(static_cast<int>(std::find(u.begin(), u.end(), v) - u.begin()));
    out.push_back(face);
  }
  return out;
}

Polynomial random_form(std::mt19937& rng, const std::vector<Variable>& vars, int degree, int terms) {
  std::uniform_int_distribution<int> c(-5, 5);
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

// ---------------------------------------------------------------------------

void running_complex(Report& r) {
  fixture::Ring S("ring x_1, x_2, x_3, x_4 lex");
  auto u = S.vs({"x_1", "x_2", "x_3", "x_4"});
  SimplicialComplex D(u, {{u[0], u[3]}, {u[1], u[2]}, {u[1], u[3]}});
  r.expect(is_vertex_decomposable(D).has_value(), "complex is vertex decomposable");
  auto first = try_shedding_vertex(D, u[0]);
  r.expect(first.valid, "vertex 1 is a shedding vertex");
  auto second = try_shedding_vertex(deletion(D, u[0]), u[3]);
  r.expect(second.valid, "vertex 4 is a shedding vertex of the deletion");
  if (first.valid) r.expect(replay_shedding(first.certificate).ok, "shedding certificate replays");
  r.expect(oracle::vertex_decomposable(facets_of(D)), "naive recursion agrees");
  auto bad = try_shedding_vertex(D, u[3]);
  r.expect(!bad.valid && bad.reason == "deletion is not pure", "decomposition at 4 rejected for non-purity");
  auto C = S.mono("x_1*x_2, x_1*x_3, x_3*x_4");
  auto step = verify_bdl(bdl_decompose(C, u[0]));
  r.expect(step.A == S.mono("x_3*x_4"), "A = (x3 x4)");
  r.expect(step.B == S.mono("x_2, x_3"), "B = (x2, x3)");
  r.expect(step.verified(), "verify_bdl passes");
  r.expect(to_ideal(D) == C, "Stanley-Reisner ideal matches");
}

void polarization_display(Report& r) {
  fixture::Ring R("ring x, y, z lex");
  auto I = R.mono("x^2*y^3, y^2*z, x*z");
  auto full = PolarizationVector::full(I);
  auto P = polarize(I);
  r.expect(P == R.mono("x_1*x_2*y_1*y_2*y_3, y_1*y_2*z_1, x_1*z_1", polarized_universe(I, full)),
           "full polarization matches");
  auto b = PolarizationVector::from_list(I.universe(), {2, 2, 3});
  r.expect(polarize(I, b) == R.mono("x_1*x_2*y_1*y_2^2, y_1*y_2*z_1, x_1*z_1", polarized_universe(I, b)),
           "b = (2,2,3) partial polarization matches");
  r.expect(depolarize(P) == I && depolarize(polarize(I, b)) == I, "depolarization recovers I");
}

void lift_and_push(Report& r) {
  fixture::Ring R("ring x, y, z lex");
  Variable x = R.v("x");
  auto I = R.mono("x^2, x*y, y^2", R.vs({"x", "y"}));
  auto bI = PolarizationVector::full(I);
  auto down = verify_bdl(bdl_decompose(I, x));
  r.expect(down.verified() && down.A == R.mono("y^2", I.universe()) && down.B == R.mono("x, y", I.universe()),
           "I = x(x,y) + (y^2) is a basic double G-link");
  auto pushed = push_bdl(down, bI);
  auto PI = polarize(I);
  r.expect(pushed.verified() && pushed.C == PI, "push gives a link on P(I)");
  r.expect(pushed.A == R.mono("y_1*y_2", PI.universe()) && pushed.B == R.mono("x_2, y_1", PI.universe()),
           "P(I) = x1(x2,y1) + (y1 y2)");
  auto lifted = lift_bdl(pushed, bI);
  r.expect(lifted.kind == LiftKind::VerifiedBdl && lifted.polar_matches, "lift of the P(I) link is verified");

  auto J = R.mono("x^2, x*y, x*z, y^2, y*z, z^2");
  auto PJ = polarize(J);
  auto pj = verify_bdl(bdl_decompose(PJ, x));
  r.expect(pj.verified(), "P(J) = x1(x2,y1,z1) + (...) is a basic double G-link");
  r.expect(pj.A == R.mono("y_1*y_2, y_1*z_1, z_1*z_2", PJ.universe()), "A on P(J) matches");
  auto lj = lift_bdl(pj, PolarizationVector::full(J));
  r.expect(lj.kind == LiftKind::DecompositionNotBdl, "lift of the P(J) link is not a basic double G-link");
  r.expect(lj.step.A == R.mono("y^2, y*z, z^2") && lj.step.B == R.mono("x, y, z"), "J = x(x,y,z) + (y^2,yz,z^2)");
  r.expect(!lj.step.checks.A_g0 && lj.step.checks.decomposition_ok, "failure is the G0 condition");
  r.expect(!is_G0(R.mono("y^2, y*z, z^2")), "is_G0((y^2,yz,z^2)) = false");
}

void stable_and_artinian(Report& r) {
  std::mt19937 rng(0x5eed);
  int stable_ok = 0, artinian_ok = 0, oracle_checked = 0;
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 3;
    auto I = fixture::random_stable_cm_ideal(rng, n);
    try {
      auto c = stable_chain(I);
      auto D = from_ideal(polarize(I));
      bool ok = verify_chain(c.chain).ok && c.chain.terminal.is_generated_by_variables() &&
                is_vertex_decomposable(D).has_value() && replay_shedding(c.shedding).ok;
      if (ok && D.universe().size() <= 9) {
        ++oracle_checked;
        ok = oracle::vertex_decomposable(facets_of(D));
      }
      if (ok) ++stable_ok;
    } catch (const Error& e) {
      r.failures.push_back(std::string("stable chain threw: ") + e.what());
    }
  }
  for (int i = 0; i < 100; ++i) {
    int n = 2 + i % 3;
    auto I = fixture::random_artinian_ideal(rng, n);
    try {
      auto c = artinian_chain(I);
      auto D = from_ideal(polarize(I));
      bool ok = verify_chain(c.chain).ok && c.chain.terminal.is_generated_by_variables() &&
                is_vertex_decomposable(D).has_value() && replay_shedding(c.shedding).ok;
      if (ok && D.universe().size() <= 9) {
        ++oracle_checked;
        ok = oracle::vertex_decomposable(facets_of(D));
      }
      if (ok) ++artinian_ok;
    } catch (const Error& e) {
      r.failures.push_back(std::string("artinian chain threw: ") + e.what());
    }
  }
  r.expect(stable_ok == 100, "stable suite " + std::to_string(stable_ok) + "/100");
  r.expect(artinian_ok == 100, "artinian suite " + std::to_string(artinian_ok) + "/100");
  r.summary = "stable " + std::to_string(stable_ok) + "/100, artinian " + std::to_string(artinian_ok) +
              "/100, oracle-checked " + std::to_string(oracle_checked);
}

void toric_initial_ideal(Report& r) {
  fixture::Ring R("ring a, b, c, d, e, f, g, h, i lex");
  auto J = R.mono("d*g^2, b*h^2, e*h, d*e*g, b*d*h, b*d*g, a*e^2, d*g*i, b*c*h, e^2*i, d*e*i, c*e*i, b*c*d*i, c*f*i");
  auto s1 = verify_bdl(bdl_decompose(J, R.v("e")));
  auto A1 = R.mono("d*g*i, c*f*i, b*h^2, b*d*h, b*c*h, d*g^2, b*d*g, b*c*d*i");
  auto B1 = R.mono("h, e*i, d*i, c*i, d*g, a*e");
  r.expect(s1.A == A1, "A' matches");
  r.expect(s1.B == B1, "B' matches");
  r.expect(s1.verified(), "J = eB' + A' verified");
  auto s2 = verify_bdl(bdl_decompose(B1, R.v("d")));
  r.expect(s2.B == R.mono("i, h, g, a*e"), "B' = d(i,h,g,ae) + ...");
  r.expect(s2.A == R.mono("h, e*i, c*i, a*e"), "... + (h, ei, ci, ae)");
  r.expect(s2.verified(), "second step verified");

  auto b = PolarizationVector::full(J);
  auto PJ = polarize(J);
  const auto& u = PJ.universe();
  auto ps = verify_bdl(bdl_decompose(PJ, R.v("e")));
  auto PA = R.mono("d*g_1*g_2, b*h_1*h_2, b*d*h, b*c*h, d*g*i, c*f*i, b*d*g, b*c*d*i", u);
  r.expect(ps.A == PA, "A on P(J) matches");
  r.expect(ps.B == PA + R.mono("h, e_2*i, d*i, c*i, d*g, a*e_2", u), "B on P(J) matches");
  r.expect(ps.verified(), "P(J) = e1 B + A verified");
  auto lifted = lift_bdl(ps, b);
  r.expect(lifted.kind == LiftKind::VerifiedBdl && lifted.step.A == A1 && lifted.step.B == B1,
           "lift reproduces A', B'");
}

void ex59(Report& r) {
  fixture::Ring R("ring y, x, z, r, s, t product(y; grevlex)");
  auto o = R.order();
  Variable y = R.v("y");
  auto G = groebner_basis(R.ideal("y^2 - x*z, y*r - s*t"), o);
  r.expect(fixture::monic_sorted(G.elements(), o) ==
               fixture::monic_sorted(R.ideal("y^2 - x*z, y*r - s*t, y*s*t - r*x*z, x*z*r^2 - s^2*t^2"), o),
           "reduced basis matches");
  auto gp = decide_gb_status(geo_polarize_gb(G, y));
  r.expect(gp.gb_status == GbStatus::NotGb && gp.nzd_status == NzdStatus::Zerodivisor, "not_gb / zerodivisor");
  r.expect(gp.methods_agree, "methods agree");
  Polynomial yp = Polynomial::variable(gp.y_primed);
  Polynomial target = yp * R.p("s*t") - R.p("r*x*z");
  auto Gp = groebner_basis(gp.polarized, gp.induced);
  r.expect(membership(target, Gp), "y' s t - r x z lies in the polarized ideal");
  auto vars = gp.induced.variables();
  r.expect(oracle::member(target, gp.polarized, vars, 3), "membership confirmed by linear algebra");
  const Monomial& lm = target.leading_monomial(gp.induced);
  bool avoided = true;
  for (const auto& g : gp.polarized) avoided = avoided && !divides(g.leading_monomial(gp.induced), lm);
  r.expect(avoided, "leading monomial avoids the polarized leading monomials");
  auto w = zerodivisor_witness(gp);
  Polynomial st = R.p("s*t");
  r.expect(w.has_value() && *w == st * w->terms().front().coef, "witness is st");
  Polynomial diff = Polynomial::variable(y) - yp;
  r.expect(!oracle::member(st, gp.polarized, vars, 2) && !membership(st, Gp), "st is not in the ideal");
  r.expect(oracle::member(st * diff, gp.polarized, vars, 3) && membership(st * diff, Gp), "st (y - y') is");
}

void ex511(Report& r) {
  fixture::Ring R("ring y, x, z, r, s, t lex");
  auto o = R.order();
  auto J = R.ideal("y^2*z + y*t^2 + s^3, y*s + t^2");
  auto H = groebner_basis(J, o);
  auto expected = R.ideal("y^2*z + y*t^2 + s^3, y*z*t^2 - s^4 + t^4, y*s + t^2, z*t^4 + s^5 - s*t^4");
  r.expect(fixture::monic_sorted(H.elements(), o) == fixture::monic_sorted(expected, o), "reduced basis H matches");
  auto gp = decide_gb_status(geo_polarize_gb(H, R.v("y")));
  auto P = groebner_basis(gp.polarized, gp.induced);
  int hJ = ideal_height(H), hP = ideal_height(P);
  r.expect(hJ == 2, "height of J is 2");
  r.expect(hP == 3, "height of the polarized ideal is 3");
  auto cmJ = cm_status(J, o), cmP = cm_status(gp.polarized, gp.induced);
  r.expect(is_positive(cmJ.status), "R/J is Cohen-Macaulay");
  r.expect(cmP.status == CheckStatus::Failed, "polarized quotient is not Cohen-Macaulay");
  r.expect(gp.gb_status == GbStatus::NotGb && gp.nzd_status == NzdStatus::Zerodivisor, "not_gb / zerodivisor");
  r.summary = "heights " + std::to_string(hJ) + " vs " + std::to_string(hP) + "; CM " + to_string(cmJ.status) +
              " vs " + to_string(cmP.status);
}

void methods_agree(Report& r) {
  std::mt19937 rng(2024);
  int agree = 0, gb = 0;
  for (int i = 0; i < 50; ++i) {
    int n = 3 + i % 2;
    std::vector<Variable> vars = fixture::plain_variables(n);
    Variable y = vars[rng() % n];
    std::vector<Variable> rest;
    for (Variable v : vars)
      if (v != y) rest.push_back(v);
    TermOrder o = i % 3 == 0 ? TermOrder::product({y}, TermOrder::grevlex(rest)) : [&] {
      std::vector<Variable> lexvars{y};
      lexvars.insert(lexvars.end(), rest.begin(), rest.end());
      return TermOrder::lex(lexvars);
    }();
    std::vector<Polynomial> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    while (static_cast<int>(gens.size()) < count) {
      Polynomial f = random_form(rng, vars, 2 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3));
      if (!f.is_zero() && deg_y(f, y) >= 1) gens.push_back(f);
    }
    auto G = groebner_basis(gens, o);
    auto a = decide_gb_status(geo_polarize_gb(G, y), DecisionMethod::Recompute, 12);
    auto b = decide_gb_status(geo_polarize_gb(G, y), DecisionMethod::Hilbert, 12);
    bool ok = a.methods_agree && b.methods_agree && a.gb_status == b.gb_status && a.gb_status != GbStatus::Unknown;
    if (ok) ++agree;
    if (a.gb_status == GbStatus::IsGb) ++gb;
  }
  r.expect(agree == 50, "methods agree on " + std::to_string(agree) + "/50");
  r.expect(gb > 0 && gb < 50, "suite exercises both outcomes");
  r.summary = std::to_string(agree) + "/50 agree (" + std::to_string(gb) + " polarize to a basis)";
}

void ex514(Report& r) {
  fixture::Ring R("ring y, a, b, c, d lex");
  auto o = R.order();
  Variable y = R.v("y");
  auto gens = R.ideal("y^2*a + y*d^2, y^2*c + b^3, c*d^2, b^3*d^2, a*b^3");
  r.expect(is_groebner_basis(gens, o), "generators form a basis");
  GroebnerBasis G(gens, o, false);
  r.expect(uniform_y_degree(G, y), "uniform y-degree");
  auto gp = decide_gb_status(geo_polarize_gb(G, y));
  r.expect(gp.gb_status == GbStatus::IsGb, "polarization is a basis under the induced order");
  r.expect(gp.polarized == R.ideal("y_2*y*a + y*d^2, y_2*y*c + b^3, c*d^2, b^3*d^2, a*b^3"), "polarization matches");
  auto up_gvd = gvd(GroebnerBasis(gp.polarized, gp.induced, false), y);
  r.expect(ideals_equal(up_gvd.N.elements(), R.ideal("c*d^2, b^3*d^2, a*b^3"), gp.induced), "N matches");
  auto up = biliaison_from_gvd(up_gvd);
  auto s1 = descend_biliaison(up, gp);
  r.expect(ideals_equal(s1.D, R.ideal("y*a + d^2, y*c, c*d^2, b^3*d^2, a*b^3"), o), "intermediate ideal matches");
  auto s2 = biliaison_at(s1.D, o, y);
  r.expect(!s2.y_primed.has_value(), "second step is a plain decomposition");
  r.expect(ideals_equal(s2.D, R.ideal("a, c, b^3*d^2"), o), "terminal ideal (a, c, b^3 d^2)");
  auto v = verify_biliaison_chain(BiliaisonChain{{s1, s2}});
  r.expect(is_positive(v.status), "chain verified");
  r.expect(v.terminal_complete_intersection, "terminal ideal is a complete intersection");
  r.summary = "chain status " + to_string(v.status);
}

void minors(Report& r) {
  fixture::Ring R("ring x_11, x_12, x_13, x_21, x_22, x_23 lex");
  auto o = R.order();
  auto I = R.ideal("x_11*x_22 - x_12*x_21, x_11*x_23 - x_13*x_21, x_12*x_23 - x_13*x_22");
  auto g = gvd(I, R.v("x_11"), o);
  r.expect(ideals_equal(g.C.elements(), R.ideal("x_22, x_23"), o), "C = (x22, x23)");
  r.expect(ideals_equal(g.N.elements(), R.ideal("x_12*x_23 - x_22*x_13"), o), "N = (x12 x23 - x22 x13)");
  Polynomial f1 = R.p("x_11*x_22 - x_12*x_21"), d1 = R.p("x_22");
  Polynomial f2 = R.p("x_11*x_23 - x_13*x_21"), d2 = R.p("x_23");
  r.expect(membership(f1 * d2 - f2 * d1, g.N), "fractions agree modulo N");
  r.expect(oracle::member(f1 * d2 - f2 * d1, g.N.elements(), R.variables(), 3), "agreement confirmed by linear algebra");
  auto step = biliaison_from_gvd(g);
  r.expect(step.checks.at("cross_relations") == CheckStatus::Verified, "cross-relations verified");
  r.expect(is_positive(step.status()), "elementary biliaison verified");
}

void singular_pipeline(Report& r) {
  auto start = Clock::now();
  fixture::Ring R("ring w, x, y, z lex");
  auto o = R.order();
  auto I = R.ideal("y*z - x^2, w*z^2 - y^2*x, w*x*z - y^3");
  auto g = gvd(I, R.v("w"), o);
  r.expect(ideals_equal(g.N.elements(), R.ideal("y*z - x^2"), o), "N = (yz - x^2)");
  r.expect(ideals_equal(g.C.elements(), R.ideal("y*z - x^2, z^2, x*z"), o), "C = (yz - x^2, z^2, xz)");
  auto s1 = biliaison_from_gvd(g);
  Variable x = R.v("x");
  auto ox = TermOrder::product({x}, TermOrder::lex(R.vs({"w", "y", "z"})));
  auto G = groebner_basis(g.C.elements(), ox);
  auto gp = decide_gb_status(geo_polarize_gb(G, x));
  auto expected = R.ideal("z^2, x*z");
  expected.push_back(Polynomial::variable(x) * Polynomial::variable(gp.y_primed) - R.p("z*y"));
  r.expect(fixture::monic_sorted(gp.polarized, gp.induced) == fixture::monic_sorted(expected, gp.induced),
           "polarization {z^2, xz, xx' - zy}");
  r.expect(gp.gb_status == GbStatus::IsGb, "polarization is a basis");
  auto s2 = biliaison_at(s1.D, ox, x);
  r.expect(ideals_equal(s2.D, R.ideal("x, z"), o), "chain ends at (x, z)");
  r.expect(ideals_equal(s2.N, R.ideal("z^2"), o), "N = (z^2)");
  auto v = verify_biliaison_chain(BiliaisonChain{{s1, s2}});
  bool levels = true;
  for (auto st : v.step_status) levels = levels && (st == CheckStatus::Verified || st == CheckStatus::Sufficient);
  r.expect(levels && is_positive(v.status), "every step verified or sufficient");
  r.expect(v.terminal_complete_intersection, "terminal ideal is a complete intersection");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  r.expect(secs < 30.0, "pipeline under 30 s");
  r.summary = "status " + to_string(v.status);
}

void property_suites(Report& r) {
  std::mt19937 rng(0x5eed);
  int n_depol = 0, n_hilb = 0, n_order = 0, n_gb = 0, n_cert = 0;
  // depolarize after polarize
  for (int i = 0; i < 200; ++i) {
    auto I = fixture::random_monomial_ideal(rng, 4, 4, 3);
    std::map<std::int32_t, std::uint32_t> bm;
    for (Variable v : I.universe()) bm[v.base] = 1 + static_cast<std::uint32_t>(rng() % 3);
    bool ok = depolarize(polarize(I)) == I && depolarize(polarize(I, PolarizationVector(bm))) == I;
    r.expect(ok, "depolarize(polarize(I)) = I");
    n_depol += ok;
  }
  // Hilbert transfer, checked against direct monomial counting
  for (int i = 0; i < 60; ++i) {
    auto I = fixture::random_monomial_ideal(rng, 3, 3, 3);
    if (I.is_zero()) continue;
    auto P = polarize(I);
    bool ok = k_polynomial(I).numerator == k_polynomial(P).numerator &&
              k_polynomial(I).series(8) == oracle::hilbert_function(I, 8);
    r.expect(ok, "Hilbert transfer");
    n_hilb += ok;
  }
  // order axioms
  auto vars = fixture::plain_variables(4);
  std::vector<TermOrder> orders{TermOrder::lex(vars), TermOrder::grevlex(vars),
                                TermOrder::product({vars[2]}, TermOrder::grevlex({vars[0], vars[1], vars[3]})),
                                TermOrder::induced(TermOrder::lex(vars), vars[0], vars[0].with_layer(2))};
  auto random_mono = [&](const std::vector<Variable>& vs) {
    std::vector<Monomial::Entry> e;
    for (Variable v : vs)
      if (auto k = rng() % 4) e.emplace_back(v, static_cast<std::uint32_t>(k));
    return Monomial(e);
  };
  for (const auto& o : orders) {
    const auto& vs = o.variables();
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_mono(vs), b = random_mono(vs), c = random_mono(vs);
      bool ok = o.compare(a, a) == 0 && (o.compare(a, b) < 0) == (o.compare(b, a) > 0) &&
                (o.compare(a, b) == 0) == (a == b) && o.compare(a * c, b * c) == o.compare(a, b) &&
                o.compare(Monomial(), a) <= 0;
      if (o.compare(a, b) < 0 && o.compare(b, c) < 0) ok = ok && o.compare(a, c) < 0;
      r.expect(ok, "order axioms for " + o.describe());
      n_order += ok;
    }
  }
  // Buchberger self-audit
  auto v3 = fixture::plain_variables(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      Polynomial f = random_form(rng, v3, 2 + static_cast<int>(rng() % 2), 2);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    TermOrder o = i % 2 ? TermOrder::lex(v3) : TermOrder::grevlex(v3);
    auto G = groebner_basis(gens, o);
    bool ok = is_groebner_basis(G.elements(), o) && contains_all(G, gens) &&
              oracle::hilbert_function(initial_ideal(G), 6) == oracle::hilbert_function(gens, v3, 6);
    for (const auto& g : G.elements()) ok = ok && oracle::member(g, gens, v3, static_cast<int>(g.total_degree()));
    r.expect(ok, "basis self-audit");
    n_gb += ok;
  }
  // certificate replay
  for (int i = 0; i < 20; ++i) {
    auto I = fixture::random_stable_cm_ideal(rng, 3);
    auto c = stable_chain(I);
    VariableNames names;
    auto j = io::Json::parse(io::bdl_chain_certificate(c.chain, names, c.shedding).dump());
    bool ok = io::verify_certificate(j).ok;
    if (!c.chain.steps.empty()) {
      auto bad = j;
      bad["payload"]["terminal"] = bad["payload"]["start"];
      ok = ok && !io::verify_certificate(bad).ok;
    }
    r.expect(ok, "certificate replay");
    n_cert += ok;
  }
  std::ostringstream s;
  s << "depol " << n_depol << ", hilbert " << n_hilb << ", order " << n_order << ", basis " << n_gb << ", cert "
    << n_cert;
  r.summary = s.str();
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Report&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "running complex: shedding (1, 4), non-pure rejection, basic double G-link", 10, running_complex},
      {2, "polarization and b = (2,2,3) partial polarization", 10, polarization_display},
      {3, "push/lift on (x,y)^2 and (x,y,z)^2", 10, lift_and_push},
      {4, "stable and artinian suites", 300, stable_and_artinian},
      {5, "toric initial ideal: two decomposition steps", 10, toric_initial_ideal},
      {6, "zerodivisor after geometric polarization", 10, ex59},
      {7, "height and Cohen-Macaulay discrepancy", 10, ex511},
      {8, "recomputation vs Hilbert identity", 10, methods_agree},
      {9, "uniform y-degree chain to a complete intersection", 10, ex514},
      {10, "2x3 minors: decomposition and witness equivalence", 10, minors},
      {11, "singular ideal pipeline", 30, singular_pipeline},
      {12, "property suites", 120, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report rep;
    auto start = Clock::now();
    try {
      c.run(rep);
    } catch (const std::exception& e) {
      rep.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.budget_seconds) rep.failures.push_back("time budget exceeded");
    bool pass = rep.failures.empty();
    failed += !pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << t.str() << " s]";
    if (!rep.summary.empty()) std::cout << " (" << rep.summary << ")";
    std::cout << '\n';
    std::vector<std::string> shown;
    for (const auto& f : rep.failures)
      if (std::find(shown.begin(), shown.end(), f) == shown.end()) shown.push_back(f);
    for (const auto& f : shown) std::cout << "    " << f << '\n';
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed\n" : "all criteria passed\n");
  return failed ? 1 : 0;
}
