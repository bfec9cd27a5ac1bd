#include "liaison/bdl.hpp"

#include <algorithm>

#include "liaison/errors.hpp"

namespace liaison {

std::vector<std::pair<std::string, bool>> BdlChecks::list() const {
  return {{"A_cm", A_cm},
          {"A_g0", A_g0},
          {"heights_ok", heights_ok},
          {"colon_ok", colon_ok},
          {"containment_ok", containment_ok},
          {"unmixed_ok", unmixed_ok},
          {"decomposition_ok", decomposition_ok}};
}

bool BdlChecks::all() const {
  auto l = list();
  return std::all_of(l.begin(), l.end(), [](const auto& p) { return p.second; });
}

std::vector<std::string> BDLStep::failed_checks() const {
  std::vector<std::string> out;
  if (!checked) return {"unchecked"};
  for (const auto& [name, ok] : checks.list())
    if (!ok) out.push_back(name);
  return out;
}

BDLStep bdl_decompose(const MonomialIdeal& C, Variable z) {
  if (std::find(C.universe().begin(), C.universe().end(), z) == C.universe().end())
    throw PreconditionError("multiplier outside the ring");
  BDLStep s;
  s.C = C;
  s.z = z;
  std::vector<Monomial> a;
  for (const auto& g : C.generators())
    if (g.exponent(z) == 0) a.push_back(g);
  s.A = MonomialIdeal(std::move(a), C.universe());
  s.B = colon(C, z).with_universe(C.universe());
  s.z_absent = C.max_exponent(z) == 0;
  return s;
}

BDLStep verify_bdl(BDLStep s, const Field& field) {
  BdlChecks& c = s.checks;
  c = BdlChecks{};
  s.checked = true;
  BDLStep fresh = bdl_decompose(s.C, s.z);
  c.decomposition_ok = fresh.A == s.A && fresh.B == s.B && (Monomial::of(s.z) * s.B + s.A) == s.C;
  if (!s.A.is_proper() || !s.B.is_proper()) return s;
  bool a_unmixed = is_unmixed(s.A);
  bool b_unmixed = is_unmixed(s.B);
  c.unmixed_ok = a_unmixed && b_unmixed;
  c.A_cm = is_cohen_macaulay(s.A, field);
  c.A_g0 = a_unmixed && is_G0(s.A);
  c.heights_ok = height(s.A) == height(s.B) - 1;
  c.colon_ok = colon(s.A, s.z) == s.A;
  c.containment_ok = s.B.contains(s.A);
  return s;
}

bool guard_no_bad_polarization(const MonomialIdeal& I, Variable x, std::uint32_t a, const PolarizationVector& b) {
  if (x.layer != 1) throw PreconditionError("guard expects a layer-1 variable");
  std::uint32_t k = I.max_exponent(x);
  std::uint32_t bi = b.at(x.base, k);
  if (!(1 < a && a <= bi && bi <= k)) throw PreconditionError("guard requires 1 < a <= b_i <= max exponent");
  Monomial xa = Monomial::of(x, a);
  bool witness = std::any_of(I.generators().begin(), I.generators().end(),
                             [&](const Monomial& nu) { return nu.exponent(x) > 0 && !divides(xa, nu); });
  if (!witness) throw PreconditionError("guard inapplicable: no generator with 0 < exponent < a");
  return true;
}

namespace {

MonomialIdeal polar_colon(const MonomialIdeal& B, Variable z, const PolarizationVector& b,
                          const std::vector<Variable>& universe) {
  MonomialIdeal zb = Monomial::of(z) * B;
  std::vector<Monomial> gens;
  for (const auto& g : zb.generators()) gens.push_back(polarize_monomial(g, b));
  MonomialIdeal p(std::move(gens), universe);
  return colon(p, z).with_universe(universe);
}

MonomialIdeal polar(const MonomialIdeal& A, const PolarizationVector& b, const std::vector<Variable>& universe) {
  std::vector<Monomial> gens;
  for (const auto& g : A.generators()) gens.push_back(polarize_monomial(g, b));
  return MonomialIdeal(std::move(gens), universe);
}

}  // namespace

LiftResult lift_bdl(const BDLStep& polar_step, const PolarizationVector& b, const Field& field) {
  if (polar_step.z.layer != 1) throw PreconditionError("lift requires a layer-1 multiplier");
  MonomialIdeal I = depolarize(polar_step.C);
  MonomialIdeal expected = polarize(I, b);
  if (!(expected == polar_step.C)) throw PreconditionError("step ideal is not P_b of its depolarization");
  LiftResult r;
  r.step = verify_bdl(bdl_decompose(I, polar_step.z), field);
  r.kind = r.step.verified() ? LiftKind::VerifiedBdl : LiftKind::DecompositionNotBdl;
  const auto& u = polar_step.C.universe();
  r.polar_matches = polar(r.step.A, b, u) == polar_step.A && polar_colon(r.step.B, polar_step.z, b, u) == polar_step.B;
  return r;
}

BDLStep push_bdl(const BDLStep& step, const PolarizationVector& b, const Field& field) {
  if (!step.verified()) throw PreconditionError("push requires a verified step");
  if (step.z.layer != 1) throw PreconditionError("push requires a layer-1 multiplier");
  MonomialIdeal P = polarize(step.C, b);
  const auto& u = P.universe();
  BDLStep s;
  s.C = P;
  s.z = step.z;
  s.A = polar(step.A, b, u);
  s.B = polar_colon(step.B, step.z, b, u);
  s.z_absent = P.max_exponent(step.z) == 0;
  std::uint32_t bi = b.at(step.z.base, step.C.max_exponent(step.z));
  for (std::int32_t j = 1; j < static_cast<std::int32_t>(bi); ++j)
    s.relabel[step.z.with_layer(j + 1)] = step.z.with_layer(j);
  return verify_bdl(std::move(s), field);
}

}  // namespace liaison
