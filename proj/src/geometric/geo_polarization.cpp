#include <algorithm>
#include <set>

#include "liaison/errors.hpp"
#include "liaison/geometric.hpp"

namespace liaison {

std::string to_string(GbStatus s) {
  switch (s) {
    case GbStatus::IsGb:
      return "is_gb";
    case GbStatus::NotGb:
      return "not_gb";
    default:
      return "unknown";
  }
}

std::string to_string(NzdStatus s) {
  switch (s) {
    case NzdStatus::Nonzerodivisor:
      return "nzd";
    case NzdStatus::Zerodivisor:
      return "zerodivisor";
    default:
      return "unknown";
  }
}

Polynomial geo_polarize_poly(const Polynomial& g, Variable y, Variable y_primed) {
  for (Variable v : g.variables())
    if (v == y_primed) throw PreconditionError("y' must not occur in the polynomial being polarized");
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    std::uint32_t e = t.mono.exponent(y);
    if (e <= 1) {
      out.push_back(t);
      continue;
    }
    out.push_back({t.coef, t.mono.with_exponent(y, 1) * Monomial::of(y_primed, e - 1)});
  }
  return Polynomial::from_terms(std::move(out));
}

namespace {

Variable fresh_layer(const TermOrder& order, Variable y) {
  std::int32_t top = y.layer;
  for (Variable v : order.variables())
    if (v.base == y.base) top = std::max(top, v.layer);
  return y.with_layer(top + 1);
}

void require_homogeneous(const std::vector<Polynomial>& polys) {
  for (const auto& f : polys)
    if (!f.is_homogeneous()) throw PreconditionError("geometric polarization test requires a homogeneous ideal");
}

std::vector<long long> trimmed(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

GeoPolarization geo_polarize_gb(const GroebnerBasis& G, Variable y) {
  const TermOrder& order = G.order();
  if (!order.contains(y)) throw PreconditionError("y is not a variable of the ring");
  if (!is_y_compatible(order, G, y)) throw PreconditionError("term order is not y-compatible for this basis");
  Variable yp = fresh_layer(order, y);
  GeoPolarization gp{.source = G, .y = y, .y_primed = yp, .induced = TermOrder::induced(order, y, yp)};
  for (const auto& g : G.elements()) gp.polarized.push_back(geo_polarize_poly(g, y, gp.y_primed));
  return gp;
}

GeoPolarization decide_gb_status(GeoPolarization gp, DecisionMethod method, int series_degree) {
  require_homogeneous(gp.source.elements());
  const TermOrder& ind = gp.induced;
  std::vector<Monomial> lms;
  for (const auto& p : gp.polarized)
    if (!p.is_zero()) lms.push_back(p.leading_monomial(ind));
  gp.partial_initial = MonomialIdeal(lms, ind.variables());
  GroebnerBasis full = groebner_basis(gp.polarized, ind);
  gp.recomputed_initial = initial_ideal(full);

  KPolynomial k_source = k_polynomial(initial_ideal(gp.source));
  KPolynomial k_polar = k_polynomial(*gp.recomputed_initial);
  gp.series_source = k_source.series(series_degree);
  std::vector<long long> sp = k_polar.series(series_degree);
  gp.series_scaled_polarized.assign(sp.size(), 0);
  for (std::size_t i = 0; i < sp.size(); ++i) gp.series_scaled_polarized[i] = sp[i] - (i ? sp[i - 1] : 0);

  bool by_recompute = *gp.partial_initial == *gp.recomputed_initial;
  // HS(R/I) = K_I / (1-t)^n and HS(R'/I') = K_I' / (1-t)^(n+1): the identity holds iff the numerators agree.
  bool by_hilbert = trimmed(k_source.numerator) == trimmed(k_polar.numerator);
  gp.methods_agree = by_recompute == by_hilbert;
  bool is_gb = method == DecisionMethod::Recompute ? by_recompute : by_hilbert;
  gp.method = method == DecisionMethod::Recompute ? "recompute" : "hilbert";
  gp.gb_status = is_gb ? GbStatus::IsGb : GbStatus::NotGb;
  gp.nzd_status = is_gb ? NzdStatus::Nonzerodivisor : NzdStatus::Zerodivisor;
  return gp;
}

std::optional<Polynomial> zerodivisor_witness(const GeoPolarization& gp) {
  GroebnerBasis full = groebner_basis(gp.polarized, gp.induced);
  Polynomial diff = Polynomial::variable(gp.y) - Polynomial::variable(gp.y_primed);
  GroebnerBasis colon = ideal_colon(gp.polarized, diff, gp.induced);
  std::vector<Polynomial> outside;
  for (const auto& c : colon.elements()) {
    Polynomial r = normal_form(c, full);
    if (!r.is_zero()) outside.push_back(r);
  }
  if (outside.empty()) return std::nullopt;
  std::stable_sort(outside.begin(), outside.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return a.size() < b.size();
  });
  return outside.front();
}

bool uniform_y_degree(const GroebnerBasis& G, Variable y) {
  std::set<int> degrees;
  for (const auto& g : G.elements()) {
    int d = deg_y(g, y);
    if (d > 0) degrees.insert(d);
  }
  return degrees.size() <= 1;
}

GeoPolarization reduced_polarization(const GeoPolarization& gp) {
  if (gp.gb_status != GbStatus::IsGb)
    throw PreconditionError("reduced polarization requires a polarization already known to be a Gröbner basis");
  GeoPolarization out = geo_polarize_gb(reduce_gb(gp.source), gp.y);
  if (!is_groebner_basis(out.polarized, out.induced))
    throw Error("internal inconsistency: polarization of the reduced basis is not a Gröbner basis");
  out.reduced = true;
  out.gb_status = GbStatus::IsGb;
  out.nzd_status = NzdStatus::Nonzerodivisor;
  out.method = "reduced";
  return out;
}

}  // namespace liaison
