#include <algorithm>
#include <map>
#include <set>

#include "liaison/bdl.hpp"
#include "liaison/errors.hpp"

namespace liaison {

namespace {

bool is_terminal(const MonomialIdeal& I) { return I.is_generated_by_variables(); }

std::string key_of(const MonomialIdeal& I) {
  std::string k;
  for (const auto& g : I.generators()) {
    for (const auto& [v, e] : g.entries())
      k += std::to_string(v.base) + "." + std::to_string(v.layer) + "^" + std::to_string(e) + "*";
    k += ",";
  }
  return k;
}

// One multiplier per base: the lowest layer present in the support.
std::vector<Variable> candidates(const MonomialIdeal& I) {
  std::map<std::int32_t, Variable> lowest;
  for (Variable v : I.support()) {
    auto it = lowest.find(v.base);
    if (it == lowest.end() || v.layer < it->second.layer) lowest[v.base] = v;
  }
  std::vector<Variable> out;
  for (const auto& [b, v] : lowest) out.push_back(v);
  return out;
}

class ChainSearch {
 public:
  ChainSearch(std::size_t budget, const Field& field) : budget_(budget), field_(field) {}

  std::optional<std::vector<BDLStep>> run(const MonomialIdeal& C) {
    if (is_terminal(C)) return std::vector<BDLStep>{};
    std::string key = key_of(C);
    if (failed_.count(key)) return std::nullopt;
    for (Variable z : candidates(C)) {
      if (used_ >= budget_) throw BudgetExceeded("glicci search budget of " + std::to_string(budget_) + " exhausted");
      ++used_;
      BDLStep s = verify_bdl(bdl_decompose(C, z), field_);
      if (!s.verified()) continue;
      auto rest = run(s.B);
      if (!rest) continue;
      rest->insert(rest->begin(), std::move(s));
      return rest;
    }
    failed_.insert(key);
    return std::nullopt;
  }

 private:
  std::size_t budget_;
  std::size_t used_ = 0;
  Field field_;
  std::set<std::string> failed_;
};

}  // namespace

std::optional<GlicciChain> glicci_chain_search(const MonomialIdeal& I, std::size_t budget, const Field& field) {
  if (!I.is_proper()) throw PreconditionError("glicci search requires a proper ideal");
  if (!is_unmixed(I)) throw PreconditionError("glicci search requires an unmixed ideal");
  if (!is_cohen_macaulay(I, field)) throw PreconditionError("glicci search requires a Cohen-Macaulay ideal");
  ChainSearch search(budget, field);
  auto steps = search.run(I);
  if (!steps) return std::nullopt;
  GlicciChain chain;
  chain.start = I;
  chain.steps = std::move(*steps);
  chain.terminal = chain.steps.empty() ? I : chain.steps.back().B;
  return chain;
}

ChainReport verify_chain(const GlicciChain& chain, const Field& field) {
  ChainReport r;
  auto fail = [&](std::string m) {
    r.ok = false;
    r.failure = std::move(m);
    return r;
  };
  MonomialIdeal current = chain.start;
  for (std::size_t k = 0; k < chain.steps.size(); ++k) {
    const BDLStep& s = chain.steps[k];
    if (!(s.C == current)) return fail("step " + std::to_string(k) + " does not start at the previous B");
    BDLStep re = verify_bdl(s, field);
    if (!re.verified()) {
      std::string names;
      for (const auto& n : re.failed_checks()) names += " " + n;
      return fail("step " + std::to_string(k) + " fails:" + names);
    }
    current = s.B;
  }
  if (!(current == chain.terminal)) return fail("terminal ideal does not match the last step");
  if (!is_terminal(chain.terminal)) return fail("terminal ideal is not generated by variables");
  return r;
}

namespace {

// Polarized ideal of K with layers of base i shifted by off[i], plus the variables E.
MonomialIdeal shifted(const MonomialIdeal& K, const std::map<std::int32_t, std::int32_t>& off,
                      const std::vector<Variable>& E, const std::vector<Variable>& universe) {
  std::vector<Monomial> gens;
  for (const auto& g : K.generators()) {
    std::vector<Monomial::Entry> e;
    for (const auto& [v, a] : g.entries()) {
      std::int32_t o = off.count(v.base) ? off.at(v.base) : 0;
      for (std::uint32_t j = 1; j <= a; ++j) e.emplace_back(v.with_layer(static_cast<std::int32_t>(j) + o), 1);
    }
    gens.emplace_back(std::move(e));
  }
  for (Variable v : E) gens.push_back(Monomial::of(v));
  return MonomialIdeal(std::move(gens), universe);
}

std::optional<Variable> first_in_support(const MonomialIdeal& K) {
  auto support = K.support();
  for (Variable v : K.universe())
    if (std::binary_search(support.begin(), support.end(), v)) return v;
  return std::nullopt;
}

MonomialIdeal without_multiple(const MonomialIdeal& K, Variable x) {
  std::vector<Monomial> a;
  for (const auto& g : K.generators())
    if (g.exponent(x) == 0) a.push_back(g);
  return MonomialIdeal(std::move(a), K.universe());
}

struct Builder {
  const Field& field;

  SheddingCertificate certificate(const MonomialIdeal& K, std::map<std::int32_t, std::int32_t> off,
                                  std::vector<Variable> E, const std::vector<Variable>& V) {
    SimplicialComplex delta = from_ideal(shifted(K, off, E, V));
    auto node = std::make_shared<SheddingNode>();
    node->complex = delta;
    if (delta.is_empty_face_only()) {
      node->leaf = LeafReason::EmptyFace;
      return node;
    }
    if (delta.is_simplex()) {
      node->leaf = LeafReason::Simplex;
      return node;
    }
    auto x = first_in_support(K);
    if (!x) throw PreconditionError("constructive chain reached an unexpected complex");
    Variable v = x->with_layer(1 + (off.count(x->base) ? off[x->base] : 0));
    MonomialIdeal K0 = without_multiple(K, *x);
    if (K.contains(Monomial::of(*x))) {
      E.push_back(v);
      return certificate(K0, off, E, V);
    }
    std::vector<Variable> W = V;
    W.erase(std::find(W.begin(), W.end(), v));
    auto lk_off = off;
    lk_off[x->base] += 1;
    node->vertex = v;
    node->link_child = certificate(colon(K, *x), lk_off, E, W);
    node->deletion_child = certificate(K0, off, E, W);
    return node;
  }

  GlicciChain chain(const MonomialIdeal& I, const MonomialIdeal& P) {
    GlicciChain ch;
    ch.start = P;
    MonomialIdeal K = I;
    MonomialIdeal C = P;
    std::map<std::int32_t, std::int32_t> off;
    while (!is_terminal(C)) {
      auto x = first_in_support(K);
      if (!x) throw PreconditionError("constructive chain stalled");
      Variable v = x->with_layer(1 + off[x->base]);
      if (K.contains(Monomial::of(*x))) {
        K = without_multiple(K, *x);
        continue;
      }
      BDLStep s = verify_bdl(bdl_decompose(C, v), field);
      C = s.B;
      ch.steps.push_back(std::move(s));
      K = colon(K, *x);
      off[x->base] += 1;
    }
    ch.terminal = C;
    return ch;
  }
};

ConstructiveChain construct(const MonomialIdeal& I, const Field& field) {
  for (Variable v : I.universe())
    if (v.layer != 1) throw PreconditionError("constructive chains expect layer-1 variables");
  MonomialIdeal P = polarize(I);
  Builder b{field};
  ConstructiveChain out;
  out.chain = b.chain(I, P);
  out.shedding = b.certificate(I, {}, {}, P.universe());
  ChainReport r = verify_chain(out.chain, field);
  if (!r.ok) throw PreconditionError("constructed chain failed verification: " + r.failure);
  ReplayReport rr = replay_shedding(out.shedding, field);
  if (!rr.ok) throw PreconditionError("constructed shedding order failed replay: " + rr.failure);
  return out;
}

}  // namespace

ConstructiveChain stable_chain(const MonomialIdeal& I, const Field& field) {
  if (!I.is_proper()) throw PreconditionError("stable chain requires a proper ideal");
  if (!is_stable(I)) throw PreconditionError("ideal is not stable");
  if (!is_cohen_macaulay(I, field)) throw PreconditionError("ideal is not Cohen-Macaulay");
  return construct(I, field);
}

ConstructiveChain artinian_chain(const MonomialIdeal& I, const Field& field) {
  if (!I.is_proper()) throw PreconditionError("artinian chain requires a proper ideal");
  if (!is_artinian(I)) throw PreconditionError("ideal is not artinian");
  return construct(I, field);
}

}  // namespace liaison
