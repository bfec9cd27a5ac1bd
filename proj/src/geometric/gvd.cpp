#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "liaison/errors.hpp"
#include "liaison/geometric.hpp"

namespace liaison {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes:
      return "yes";
    case Tri::No:
      return "no";
    default:
      return "unknown";
  }
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Success:
      return "success";
    case Outcome::Failure:
      return "failure";
    default:
      return "unknown";
  }
}

YSplit split_at(const std::vector<Polynomial>& basis, Variable y) {
  YSplit s;
  Monomial ym = Monomial::of(y);
  for (const auto& g : basis) {
    if (deg_y(g, y) <= 0) {
      s.h.push_back(g);
      continue;
    }
    std::vector<Term> d, r;
    for (const auto& t : g.terms()) {
      if (t.mono.exponent(y) > 0)
        d.push_back({t.coef, t.mono / ym});
      else
        r.push_back(t);
    }
    s.with_y.push_back(g);
    s.d.push_back(Polynomial::from_terms(std::move(d)));
    s.r.push_back(Polynomial::from_terms(std::move(r)));
  }
  return s;
}

namespace {

bool is_variable_ideal(const GroebnerBasis& gb) {
  return std::all_of(gb.elements().begin(), gb.elements().end(), [](const Polynomial& f) {
    return f.is_monomial() && f.terms()[0].mono.degree() == 1;
  });
}

int height_or_zero(const GroebnerBasis& gb) { return gb.is_zero() ? 0 : ideal_height(gb); }

void decide_nondegeneracy(GVD& g) {
  if (g.C.is_unit()) {
    g.nondegenerate = Tri::No;
    g.nondegeneracy_method = "link is the unit ideal";
    return;
  }
  if (contains_all(g.N, g.C.elements())) {
    g.nondegenerate = Tri::No;
    g.nondegeneracy_method = "link equals deletion";
    return;
  }
  if (height_or_zero(g.C) != height_or_zero(g.N)) {
    g.nondegenerate = Tri::Yes;
    g.nondegeneracy_method = "heights differ";
    return;
  }
  CheckStatus rad = g.N.is_zero() ? CheckStatus::Verified : radical_status(g.N.elements(), g.I.order()).status;
  if (is_positive(rad)) {
    g.nondegenerate = Tri::Yes;
    g.nondegeneracy_method = "deletion is radical and differs from the link";
    return;
  }
  for (const auto& c : g.C.elements()) {
    if (!radical_power(c, g.N, 6)) {
      g.nondegenerate = Tri::Unknown;
      g.nondegeneracy_method = "radical comparison exceeded the power budget";
      return;
    }
  }
  g.nondegenerate = Tri::No;
  g.nondegeneracy_method = "link lies in the radical of the deletion";
}

TermOrder order_at(const TermOrder& base, const std::vector<Variable>& ring, Variable y) {
  std::vector<Variable> rest;
  for (Variable v : ring)
    if (v != y) rest.push_back(v);
  if (rest.empty()) return TermOrder::lex({y});
  return TermOrder::product({y}, base.restricted_to(rest));
}

}  // namespace

GVD gvd(const GroebnerBasis& I, Variable y) {
  const TermOrder& order = I.order();
  if (!order.contains(y)) throw PreconditionError("y is not a variable of the ring");
  if (!is_y_compatible_global(order, y)) throw PreconditionError("term order is not y-compatible");
  for (const auto& g : I.elements())
    if (deg_y(g, y) > 1)
      throw PreconditionError("Gröbner basis is not linear in y; apply geometric polarization first");
  GVD out{.I = I, .y = y, .C = GroebnerBasis({}, order, true), .N = GroebnerBasis({}, order, true)};
  out.split = split_at(I.elements(), y);
  std::vector<Polynomial> c = out.split.d;
  for (std::size_t i = 0; i < out.split.d.size(); ++i)
    out.in_y_generators.push_back(out.split.d[i] * Monomial::of(y));
  for (const auto& h : out.split.h) {
    c.push_back(h);
    out.in_y_generators.push_back(h);
  }
  out.C = groebner_basis(c, order);
  out.N = groebner_basis(out.split.h, order);
  decide_nondegeneracy(out);
  return out;
}

GVD gvd(const std::vector<Polynomial>& generators, Variable y, const TermOrder& order) {
  return gvd(groebner_basis(generators, order), y);
}

// ---- decomposability search -------------------------------------------------

namespace {

std::string key_of(const GroebnerBasis& gb, const std::vector<Variable>& ring) {
  std::ostringstream os;
  for (Variable v : ring) os << v.base << '.' << v.layer << ',';
  os << '|';
  for (const auto& f : gb.elements()) {
    for (const auto& t : f.terms()) {
      os << to_string(t.coef) << '*';
      for (const auto& [v, e] : t.mono.entries()) os << v.base << '.' << v.layer << '^' << e << ' ';
      os << '+';
    }
    os << ';';
  }
  return os.str();
}

struct Search {
  TermOrder base;
  GvdMode mode;
  Field field;
  std::map<std::string, GvdTree> memo;

  GvdTree fail(GvdTreeNode node, Outcome o, std::string reason) {
    node.outcome = o;
    node.status = o == Outcome::Failure ? CheckStatus::Failed : CheckStatus::Unknown;
    node.reason = std::move(reason);
    return std::make_shared<const GvdTreeNode>(std::move(node));
  }

  StatusResult n_check_radical(const GroebnerBasis& n) {
    if (n.is_zero()) return {CheckStatus::Verified, "zero ideal"};
    return radical_status(n.elements(), n.order());
  }
  StatusResult n_check_cm(const GroebnerBasis& n) {
    if (n.is_zero()) return {CheckStatus::Verified, "polynomial ring"};
    return cm_status(n.elements(), n.order(), field);
  }

  GvdTree run(const std::vector<Polynomial>& generators, const std::vector<Variable>& ring) {
    TermOrder order = ring.empty() ? TermOrder::lex({}) : base.restricted_to(ring);
    GroebnerBasis gb = groebner_basis(generators, order);
    std::string key = key_of(gb, ring);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    GvdTree t = compute(gb, ring, order);
    memo.emplace(key, t);
    return t;
  }

  GvdTree compute(const GroebnerBasis& gb, const std::vector<Variable>& ring, const TermOrder& order) {
    GvdTreeNode node;
    node.ideal = gb.elements();
    node.ring = ring;
    if (gb.is_unit() || is_variable_ideal(gb)) {
      node.leaf = true;
      node.outcome = Outcome::Success;
      node.status = CheckStatus::Verified;
      node.reason = gb.is_unit() ? "unit ideal" : "generated by indeterminates";
      return std::make_shared<const GvdTreeNode>(std::move(node));
    }
    StatusResult unmixed = unmixed_status(gb.elements(), order, field);
    node.checks["unmixed"] = unmixed.status;
    if (unmixed.status == CheckStatus::Failed) return fail(std::move(node), Outcome::Failure, "not unmixed");

    std::vector<Variable> support;
    for (const auto& f : gb.elements())
      for (Variable v : f.variables()) support.push_back(v);
    support = sorted_unique(std::move(support));

    std::optional<GvdTree> undecided;
    std::string reasons;
    for (Variable y : ring) {
      if (!std::binary_search(support.begin(), support.end(), y)) continue;
      TermOrder oy = order_at(base, ring, y);
      GroebnerBasis gy = groebner_basis(gb.elements(), oy);
      bool linear = std::all_of(gy.elements().begin(), gy.elements().end(),
                                [&](const Polynomial& f) { return deg_y(f, y) <= 1; });
      if (!linear) continue;
      YSplit s = split_at(gy.elements(), y);
      std::vector<Polynomial> c = s.d;
      c.insert(c.end(), s.h.begin(), s.h.end());
      std::vector<Variable> rest;
      for (Variable v : ring)
        if (v != y) rest.push_back(v);

      GvdTreeNode cand = node;
      cand.y = y;
      cand.c_child = run(c, rest);
      CheckStatus st = conjunction(unmixed.status, cand.c_child->status);
      if (mode == GvdMode::Plain) {
        cand.n_child = run(s.h, rest);
        st = conjunction(st, cand.n_child->status);
      } else {
        TermOrder rest_order = rest.empty() ? TermOrder::lex({}) : base.restricted_to(rest);
        GroebnerBasis n = groebner_basis(s.h, rest_order);
        if (n.is_unit()) {
          cand.checks["N_radical"] = CheckStatus::Failed;
        } else {
          cand.checks["N_radical"] = n_check_radical(n).status;
          cand.checks["N_cm"] = n_check_cm(n).status;
        }
        for (const auto& [name, cs] : cand.checks)
          if (name != "unmixed") st = conjunction(st, cs);
      }
      cand.status = st;
      if (is_positive(st)) {
        cand.outcome = Outcome::Success;
        cand.reason = "decomposition";
        return std::make_shared<const GvdTreeNode>(std::move(cand));
      }
      if (st == CheckStatus::Unknown && !undecided) {
        cand.outcome = Outcome::Unknown;
        cand.reason = "undecided check";
        undecided = std::make_shared<const GvdTreeNode>(std::move(cand));
      }
    }
    if (undecided) return *undecided;
    if (unmixed.status == CheckStatus::Unknown)
      return fail(std::move(node), Outcome::Unknown, "unmixedness undecided and no decomposition found");
    return fail(std::move(node), Outcome::Failure, "no variable gives a decomposition");
  }
};

}  // namespace

GvdTree is_geometrically_vertex_decomposable(const std::vector<Polynomial>& generators, const TermOrder& base,
                                             GvdMode mode, const Field& field) {
  Search s{base, mode, field, {}};
  return s.run(generators, base.variables());
}

CheckStatus replay_gvd_tree(const GvdTree& tree, GvdMode mode, const TermOrder& base, const Field& field) {
  std::function<CheckStatus(const GvdTree&)> replay = [&](const GvdTree& n) -> CheckStatus {
    if (!n) return CheckStatus::Failed;
    TermOrder order = n->ring.empty() ? TermOrder::lex({}) : base.restricted_to(n->ring);
    GroebnerBasis gb = groebner_basis(n->ideal, order);
    if (gb.elements() != n->ideal) return CheckStatus::Failed;
    if (n->leaf) return (gb.is_unit() || is_variable_ideal(gb)) ? CheckStatus::Verified : CheckStatus::Failed;
    if (!n->y || !n->c_child) return CheckStatus::Failed;
    Variable y = *n->y;
    CheckStatus st = unmixed_status(gb.elements(), order, field).status;
    GroebnerBasis gy = groebner_basis(gb.elements(), order_at(base, n->ring, y));
    for (const auto& f : gy.elements())
      if (deg_y(f, y) > 1) return CheckStatus::Failed;
    YSplit s = split_at(gy.elements(), y);
    std::vector<Polynomial> c = s.d;
    c.insert(c.end(), s.h.begin(), s.h.end());
    std::vector<Variable> rest;
    for (Variable v : n->ring)
      if (v != y) rest.push_back(v);
    if (rest != n->c_child->ring) return CheckStatus::Failed;
    TermOrder rest_order = rest.empty() ? TermOrder::lex({}) : base.restricted_to(rest);
    if (groebner_basis(c, rest_order).elements() != n->c_child->ideal) return CheckStatus::Failed;
    st = conjunction(st, replay(n->c_child));
    GroebnerBasis nb = groebner_basis(s.h, rest_order);
    if (mode == GvdMode::Plain) {
      if (!n->n_child || nb.elements() != n->n_child->ideal) return CheckStatus::Failed;
      st = conjunction(st, replay(n->n_child));
    } else {
      if (nb.is_unit()) return CheckStatus::Failed;
      if (!nb.is_zero()) {
        st = conjunction(st, radical_status(nb.elements(), rest_order).status);
        st = conjunction(st, cm_status(nb.elements(), rest_order, field).status);
      }
    }
    return st;
  };
  return replay(tree);
}

}  // namespace liaison
