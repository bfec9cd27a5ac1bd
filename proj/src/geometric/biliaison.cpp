#include <algorithm>
#include <random>

#include "liaison/errors.hpp"
#include "liaison/geometric.hpp"

namespace liaison {

CheckStatus BiliaisonStep::status() const {
  CheckStatus s = CheckStatus::Verified;
  for (const auto& [name, c] : checks) s = conjunction(s, c);
  return s;
}

namespace {

CheckStatus verdict(bool ok) { return ok ? CheckStatus::Verified : CheckStatus::Failed; }

int height_or_zero(const GroebnerBasis& gb) { return gb.is_zero() ? 0 : ideal_height(gb); }

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  return contains_all(a, b.elements()) && contains_all(b, a.elements());
}

std::vector<Polynomial> depol_all(const std::vector<Polynomial>& fs, Variable y, Variable yp) {
  std::vector<Polynomial> out;
  for (const auto& f : fs) out.push_back(depol(f, y, yp));
  return out;
}

std::string failed_list(const std::map<std::string, CheckStatus>& checks) {
  std::string out;
  for (const auto& [name, c] : checks)
    if (c == CheckStatus::Failed) out += (out.empty() ? "" : ", ") + name;
  return out;
}

}  // namespace

std::map<std::string, CheckStatus> audit_biliaison_step(const BiliaisonStep& step,
                                                        const std::set<std::string>& assertions,
                                                        const Field& field) {
  const TermOrder& order = step.order;
  std::map<std::string, CheckStatus> c;
  GroebnerBasis gi = groebner_basis(step.I, order);
  GroebnerBasis gd = groebner_basis(step.D, order);
  GroebnerBasis gn = groebner_basis(step.N, order);

  bool proper = !gi.is_unit() && !gd.is_unit() && !gn.is_unit();
  c["proper"] = verdict(proper);
  c["containment"] = verdict(contains_all(gi, step.N) && contains_all(gd, step.N));
  if (proper) {
    int hd = height_or_zero(gd), hn = height_or_zero(gn), hi = height_or_zero(gi);
    c["heights"] = verdict(hd == hn + 1 && hn + 1 == hi);
  } else {
    c["heights"] = CheckStatus::Failed;
  }

  YSplit s = split_at(step.I, step.y);
  bool cross = true;
  for (std::size_t i = 0; i < s.with_y.size() && cross; ++i)
    for (std::size_t j = i + 1; j < s.with_y.size() && cross; ++j)
      cross = membership(s.r[i] * s.d[j] - s.r[j] * s.d[i], gn);
  c["cross_relations"] = verdict(cross);

  std::vector<Polynomial> dgens = s.d;
  dgens.insert(dgens.end(), s.h.begin(), s.h.end());
  c["link_generators"] = verdict(same_ideal(gd, groebner_basis(dgens, order)));

  bool gen_map = membership(step.witness_v, gi) && membership(step.witness_d, gd);
  std::vector<Polynomial> gens_i = s.with_y;
  gens_i.insert(gens_i.end(), s.h.begin(), s.h.end());
  for (std::size_t i = 0; i < dgens.size() && gen_map; ++i)
    gen_map = membership(step.witness_v * dgens[i] - step.witness_d * gens_i[i], gn);
  c["generator_map"] = verdict(gen_map);

  auto nzd = [&](const Polynomial& f) {
    if (f.is_zero()) return false;
    if (gn.is_zero()) return true;
    return same_ideal(ideal_colon(step.N, f, order), gn);
  };
  c["witness_nzd"] = verdict(nzd(step.witness_v) && nzd(step.witness_d));

  if (gn.is_zero()) {
    c["N_cm"] = CheckStatus::Verified;
    c["N_g0"] = CheckStatus::Verified;
  } else if (!gn.is_unit()) {
    c["N_cm"] = cm_status(gn.elements(), order, field).status;
    c["N_g0"] = g0_status(gn.elements(), order).status;
  }
  if (proper) {
    c["I_unmixed"] = unmixed_status(gi.elements(), order, field).status;
    c["D_unmixed"] = unmixed_status(gd.elements(), order, field).status;
  }

  if (step.y_primed) {
    Variable yp = *step.y_primed;
    TermOrder ind = TermOrder::induced(order, step.y, yp);
    bool ok = step.polarized_basis.size() == step.I.size();
    for (std::size_t i = 0; ok && i < step.I.size(); ++i)
      ok = step.polarized_basis[i] == geo_polarize_poly(step.I[i], step.y, yp);
    c["polarization_gb"] = verdict(ok && is_groebner_basis(step.polarized_basis, ind));
  }

  for (auto& [name, st] : c)
    if (st == CheckStatus::Unknown && assertions.count(name)) st = CheckStatus::Asserted;
  return c;
}

BiliaisonStep biliaison_from_gvd(const GVD& g, const std::set<std::string>& assertions, const Field& field) {
  if (g.nondegenerate == Tri::No) throw PreconditionError("degenerate geometric vertex decomposition");
  if (g.split.with_y.empty()) throw PreconditionError("no Gröbner basis element involves y");
  BiliaisonStep step{.order = g.I.order(),
                     .I = g.I.elements(),
                     .y = g.y,
                     .D = g.C.elements(),
                     .N = g.N.elements(),
                     .witness_v = g.split.with_y.front(),
                     .witness_d = g.split.d.front()};
  // Witness: a single element of the split, else a combination sum c_i (y d_i + r_i) over sum c_i d_i.
  auto nzd = [&](const Polynomial& f) {
    if (f.is_zero()) return false;
    if (g.N.is_zero()) return true;
    return same_ideal(ideal_colon(g.N.elements(), f, step.order), g.N);
  };
  const std::size_t k = g.split.with_y.size();
  std::vector<std::vector<long>> weights;
  for (std::size_t i = 0; i < k; ++i) {
    weights.emplace_back(k, 0);
    weights.back()[i] = 1;
  }
  if (k > 1) {
    weights.emplace_back(k, 1);
    std::mt19937 rng(0x5eed);
    for (int t = 0; t < 4; ++t) {
      weights.emplace_back(k);
      for (auto& w : weights.back()) w = 1 + static_cast<long>(rng() % 9);
    }
  }
  for (const auto& w : weights) {
    Polynomial v, d;
    for (std::size_t i = 0; i < k; ++i) {
      v += g.split.with_y[i] * Polynomial(w[i]);
      d += g.split.d[i] * Polynomial(w[i]);
    }
    if (nzd(v) && nzd(d)) {
      step.witness_v = v;
      step.witness_d = d;
      break;
    }
  }
  step.checks = audit_biliaison_step(step, assertions, field);
  if (g.nondegenerate == Tri::Unknown)
    step.checks["nondegenerate"] = assertions.count("nondegenerate") ? CheckStatus::Asserted : CheckStatus::Unknown;
  if (std::string f = failed_list(step.checks); !f.empty())
    throw PreconditionError("elementary G-biliaison checks failed: " + f);
  return step;
}

BiliaisonStep descend_biliaison(const BiliaisonStep& upstairs, const GeoPolarization& gp,
                                const std::set<std::string>& assertions, const Field& field) {
  if (gp.gb_status != GbStatus::IsGb) throw PreconditionError("polarization is not known to be a Gröbner basis");
  if (upstairs.y != gp.y) throw PreconditionError("step and polarization use different variables");
  if (!is_positive(upstairs.status())) throw PreconditionError("upstairs step is not verified");
  Variable y = gp.y, yp = gp.y_primed;
  BiliaisonStep step{.order = gp.source.order(),
                     .I = gp.source.elements(),
                     .y = y,
                     .D = depol_all(upstairs.D, y, yp),
                     .N = depol_all(upstairs.N, y, yp),
                     .witness_v = depol(upstairs.witness_v, y, yp),
                     .witness_d = depol(upstairs.witness_d, y, yp),
                     .y_primed = yp,
                     .polarized_basis = gp.polarized};
  step.checks = audit_biliaison_step(step, assertions, field);
  if (std::string f = failed_list(step.checks); !f.empty())
    throw PreconditionError("descended biliaison checks failed: " + f);
  return step;
}

ChainVerdict verify_biliaison_chain(const BiliaisonChain& chain, const Field& field) {
  ChainVerdict v;
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const BiliaisonStep& s = chain.steps[k];
    std::set<std::string> asserted;
    for (const auto& [name, c] : s.checks)
      if (c == CheckStatus::Asserted) asserted.insert(name);
    auto fresh = audit_biliaison_step(s, asserted, field);
    if (auto it = s.checks.find("nondegenerate"); it != s.checks.end()) fresh["nondegenerate"] = it->second;
    CheckStatus st = CheckStatus::Verified;
    for (const auto& [name, c] : fresh) {
      st = conjunction(st, c);
      if (c == CheckStatus::Failed) v.problems.push_back("step " + std::to_string(k + 1) + ": " + name + " failed");
    }
    if (k + 1 < chain.steps.size()) {
      const BiliaisonStep& next = chain.steps[k + 1];
      if (!ideals_equal(s.D, next.I, next.order)) {
        v.problems.push_back("step " + std::to_string(k + 1) + ": link ideal differs from the next step's ideal");
        st = CheckStatus::Failed;
      }
    }
    v.step_status.push_back(st);
    v.status = conjunction(v.status, st);
  }
  if (!chain.steps.empty()) {
    const BiliaisonStep& last = chain.steps.back();
    v.terminal_complete_intersection = is_complete_intersection(last.D, last.order);
  }
  return v;
}

BiliaisonStep biliaison_at(const std::vector<Polynomial>& generators, const TermOrder& order, Variable y,
                           const std::set<std::string>& assertions, const Field& field) {
  GroebnerBasis G = buchberger(generators, order);
  if (is_groebner_basis(generators, order)) G = GroebnerBasis(generators, order, false);
  bool linear = std::all_of(G.elements().begin(), G.elements().end(),
                            [&](const Polynomial& g) { return deg_y(g, y) <= 1; });
  if (linear) return biliaison_from_gvd(gvd(G, y), assertions, field);
  GeoPolarization gp = decide_gb_status(geo_polarize_gb(G, y));
  if (gp.gb_status != GbStatus::IsGb) {
    gp = decide_gb_status(geo_polarize_gb(reduce_gb(G), y));
    if (gp.gb_status != GbStatus::IsGb)
      throw PreconditionError("polarization at y is not a Gröbner basis under the induced order");
  }
  BiliaisonStep up = biliaison_from_gvd(gvd(GroebnerBasis(gp.polarized, gp.induced, false), y), assertions, field);
  return descend_biliaison(up, gp, assertions, field);
}

}  // namespace liaison
