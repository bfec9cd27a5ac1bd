#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "liaison/errors.hpp"
#include "liaison/simplicial.hpp"

namespace liaison {

namespace {

using Face = SimplicialComplex::Face;

SheddingCertificate leaf(const SimplicialComplex& c, LeafReason r) {
  auto n = std::make_shared<SheddingNode>();
  n->complex = c;
  n->leaf = r;
  return n;
}

class VdSearch {
 public:
  std::optional<SheddingCertificate> run(const SimplicialComplex& c) {
    std::string key = c.canonical_key() + "|";
    for (Variable v : c.universe()) key += std::to_string(v.base) + "." + std::to_string(v.layer) + ",";
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    auto result = search(c);
    memo_[key] = result;
    return result;
  }

  ShedAttempt attempt(const SimplicialComplex& c, Variable v) {
    ShedAttempt a;
    if (!c.is_pure()) {
      a.reason = "complex is not pure";
      return a;
    }
    auto k = c.index_of(v);
    if (!k || !c.contains_face(Face{1} << *k)) {
      a.reason = "vertex is not a face of the complex";
      return a;
    }
    SimplicialComplex lk = link(c, v), del = deletion(c, v);
    if (!del.is_pure()) {
      a.reason = "deletion is not pure";
      return a;
    }
    if (!lk.is_pure()) {
      a.reason = "link is not pure";
      return a;
    }
    auto cl = run(lk);
    if (!cl) {
      a.reason = "link is not vertex decomposable";
      return a;
    }
    auto cd = run(del);
    if (!cd) {
      a.reason = "deletion is not vertex decomposable";
      return a;
    }
    auto n = std::make_shared<SheddingNode>();
    n->complex = c;
    n->vertex = v;
    n->link_child = *cl;
    n->deletion_child = *cd;
    a.valid = true;
    a.certificate = n;
    return a;
  }

 private:
  std::optional<SheddingCertificate> search(const SimplicialComplex& c) {
    if (c.is_void() || !c.is_pure()) return std::nullopt;
    if (c.is_empty_face_only()) return leaf(c, LeafReason::EmptyFace);
    if (c.is_simplex()) return leaf(c, LeafReason::Simplex);
    for (Variable v : c.vertices()) {
      auto a = attempt(c, v);
      if (a.valid) return a.certificate;
    }
    return std::nullopt;
  }

  std::unordered_map<std::string, std::optional<SheddingCertificate>> memo_;
};

}  // namespace

std::optional<SheddingCertificate> is_vertex_decomposable(const SimplicialComplex& complex) {
  VdSearch s;
  return s.run(complex);
}

ShedAttempt try_shedding_vertex(const SimplicialComplex& complex, Variable v) {
  VdSearch s;
  return s.attempt(complex, v);
}

std::optional<SheddingCertificate> is_weakly_vertex_decomposable(const SimplicialComplex& complex,
                                                                 const Field& field) {
  if (complex.is_void() || !complex.is_pure()) return std::nullopt;
  if (complex.is_empty_face_only()) return leaf(complex, LeafReason::EmptyFace);
  if (complex.is_simplex()) return leaf(complex, LeafReason::Simplex);
  VdSearch s;
  for (Variable v : complex.vertices()) {
    SimplicialComplex lk = link(complex, v), del = deletion(complex, v);
    if (!del.is_pure()) continue;
    auto cl = s.run(lk);
    if (!cl || !is_cm_reisner(del, field)) continue;
    auto n = std::make_shared<SheddingNode>();
    n->complex = complex;
    n->vertex = v;
    n->weak = true;
    n->link_child = *cl;
    n->deletion_child = leaf(del, LeafReason::CohenMacaulay);
    return SheddingCertificate(n);
  }
  return std::nullopt;
}

namespace {

bool plain_only(const SheddingCertificate& n) {
  if (!n) return true;
  if (n->leaf == LeafReason::CohenMacaulay || n->weak) return false;
  return plain_only(n->link_child) && plain_only(n->deletion_child);
}

void replay_node(const SheddingCertificate& n, const Field& field, ReplayReport& r) {
  if (!r.ok) return;
  ++r.nodes;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.failure = std::move(msg);
  };
  if (!n) return fail("missing certificate node");
  const auto& c = n->complex;
  switch (n->leaf) {
    case LeafReason::EmptyFace:
      if (!c.is_empty_face_only()) fail("leaf claims {∅} but the complex differs");
      return;
    case LeafReason::Simplex:
      if (!c.is_simplex()) fail("leaf claims a simplex but the complex has several facets");
      return;
    case LeafReason::CohenMacaulay:
      if (c.is_void() || !is_cm_reisner(c, field)) fail("leaf claims Cohen-Macaulay but Reisner's criterion fails");
      return;
    case LeafReason::None:
      break;
  }
  if (!c.is_pure()) return fail("complex at a decomposition node is not pure");
  if (!n->vertex) return fail("decomposition node without a vertex");
  auto k = c.index_of(*n->vertex);
  if (!k || !c.contains_face(Face{1} << *k)) return fail("shedding vertex is not a vertex of the complex");
  if (!n->link_child || !(n->link_child->complex == link(c, *n->vertex)))
    return fail("stored link does not match the recomputed link");
  if (!n->deletion_child || !(n->deletion_child->complex == deletion(c, *n->vertex)))
    return fail("stored deletion does not match the recomputed deletion");
  if (n->link_child->weak) return fail("link child must carry a plain certificate");
  replay_node(n->link_child, field, r);
  if (n->weak && n->deletion_child->leaf != LeafReason::CohenMacaulay)
    return fail("weak node must end in a Cohen-Macaulay deletion leaf");
  if (!n->weak && !plain_only(n->deletion_child))
    return fail("plain node cannot contain weak steps");
  replay_node(n->deletion_child, field, r);
}

}  // namespace

ReplayReport replay_shedding(const SheddingCertificate& certificate, const Field& field) {
  ReplayReport r;
  replay_node(certificate, field, r);
  if (r.ok && certificate && certificate->link_child && !plain_only(certificate->link_child)) {
    r.ok = false;
    r.failure = "link subtree must be a plain shedding certificate";
  }
  return r;
}

namespace {

bool shelling_step_ok(const std::vector<Face>& placed, Face f) {
  std::vector<Face> inter;
  for (Face g : placed) inter.push_back(f & g);
  int want = std::popcount(f) - 1;
  bool any = false;
  for (Face a : inter) {
    bool maximal = std::none_of(inter.begin(), inter.end(), [a](Face b) { return b != a && (a & ~b) == 0; });
    if (!maximal) continue;
    if (std::popcount(a) != want) return false;
    any = true;
  }
  return any;
}

bool shell(const std::vector<Face>& facets, std::vector<bool>& used, std::vector<Face>& order) {
  if (order.size() == facets.size()) return true;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (used[i]) continue;
    if (!order.empty() && !shelling_step_ok(order, facets[i])) continue;
    used[i] = true;
    order.push_back(facets[i]);
    if (shell(facets, used, order)) return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Face>> is_shellable(const SimplicialComplex& complex, std::size_t max_facets) {
  if (complex.facets().size() > max_facets)
    throw BudgetExceeded("shellability search limited to " + std::to_string(max_facets) + " facets");
  if (complex.is_void()) return std::nullopt;
  std::vector<Face> facets = complex.facets();
  std::stable_sort(facets.begin(), facets.end(), [](Face a, Face b) { return std::popcount(a) > std::popcount(b); });
  std::vector<bool> used(facets.size(), false);
  std::vector<Face> order;
  if (shell(facets, used, order)) return order;
  return std::nullopt;
}

}  // namespace liaison
