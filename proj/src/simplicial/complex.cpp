#include <algorithm>
#include <bit>
#include <unordered_set>

#include "liaison/errors.hpp"
#include "liaison/simplicial.hpp"

namespace liaison {

namespace {

using Face = SimplicialComplex::Face;

std::vector<Face> maximalize(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces)
    if (std::none_of(kept.begin(), kept.end(), [f](Face k) { return (f & ~k) == 0; })) kept.push_back(f);
  std::sort(kept.begin(), kept.end());
  return kept;
}

Face drop_bit(Face m, std::size_t k) {
  Face low = m & ((Face{1} << k) - 1);
  Face high = k + 1 >= 64 ? 0 : (m >> (k + 1)) << k;
  return low | high;
}

void check_size(std::size_t n) {
  if (n > 64) throw PreconditionError("simplicial complexes are limited to 64 vertices");
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Variable> universe, const std::vector<std::vector<Variable>>& faces)
    : universe_(std::move(universe)) {
  check_size(universe_.size());
  std::vector<Face> masks;
  for (const auto& f : faces) masks.push_back(mask_of(f));
  facets_ = maximalize(std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(std::vector<Variable> universe, std::vector<Face> faces) {
  check_size(universe.size());
  SimplicialComplex c;
  c.universe_ = std::move(universe);
  Face all = c.universe_.size() == 64 ? ~Face{0} : ((Face{1} << c.universe_.size()) - 1);
  for (Face f : faces)
    if (f & ~all) throw PreconditionError("face outside the vertex universe");
  c.facets_ = maximalize(std::move(faces));
  return c;
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<Variable> universe) {
  return from_masks(std::move(universe), {});
}

SimplicialComplex SimplicialComplex::empty_face(std::vector<Variable> universe) {
  return from_masks(std::move(universe), {0});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<Variable> universe, const std::vector<Variable>& vertices) {
  SimplicialComplex c = void_complex(std::move(universe));
  c.facets_ = {c.mask_of(vertices)};
  return c;
}

std::vector<std::vector<Variable>> SimplicialComplex::facet_sets() const {
  std::vector<std::vector<Variable>> out;
  for (Face f : facets_) out.push_back(face_vertices(f));
  return out;
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  int d = 0;
  for (Face f : facets_) d = std::max(d, std::popcount(f));
  return d - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](Face f) { return std::popcount(f) == std::popcount(facets_.front()); });
}

bool SimplicialComplex::contains_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & ~g) == 0; });
}

std::vector<Variable> SimplicialComplex::vertices() const {
  Face all = 0;
  for (Face f : facets_) all |= f;
  return face_vertices(all);
}

std::optional<std::size_t> SimplicialComplex::index_of(Variable v) const {
  auto it = std::find(universe_.begin(), universe_.end(), v);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

SimplicialComplex::Face SimplicialComplex::mask_of(const std::vector<Variable>& vs) const {
  Face m = 0;
  for (Variable v : vs) {
    auto k = index_of(v);
    if (!k) throw PreconditionError("vertex outside the complex universe");
    m |= Face{1} << *k;
  }
  return m;
}

std::vector<Variable> SimplicialComplex::face_vertices(Face f) const {
  std::vector<Variable> out;
  for (std::size_t k = 0; k < universe_.size(); ++k)
    if (f >> k & 1U) out.push_back(universe_[k]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::all_faces() const {
  std::unordered_set<Face> seen;
  for (Face f : facets_) {
    Face sub = f;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::string SimplicialComplex::canonical_key() const {
  auto sets = facet_sets();
  std::sort(sets.begin(), sets.end());
  std::string key = facets_.empty() ? "void" : "";
  for (const auto& s : sets) {
    key += '[';
    for (Variable v : s) key += std::to_string(v.base) + "." + std::to_string(v.layer) + ",";
    key += ']';
  }
  return key;
}

SimplicialComplex from_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw PreconditionError("Stanley-Reisner complex requires a squarefree ideal");
  const auto& u = ideal.universe();
  check_size(u.size());
  SimplicialComplex base = SimplicialComplex::void_complex(u);
  Face all = u.size() == 64 ? ~Face{0} : ((Face{1} << u.size()) - 1);
  std::vector<Face> facets;
  for (const auto& prime : minimal_primes(ideal)) facets.push_back(all & ~base.mask_of(prime));
  return SimplicialComplex::from_masks(u, std::move(facets));
}

MonomialIdeal to_ideal(const SimplicialComplex& complex) {
  const auto& u = complex.universe();
  if (complex.is_void()) return MonomialIdeal::unit(u);
  Face all = u.size() == 64 ? ~Face{0} : ((Face{1} << u.size()) - 1);
  std::vector<Monomial> complements;
  for (Face f : complex.facets()) {
    std::vector<Monomial::Entry> e;
    for (Variable v : complex.face_vertices(all & ~f)) e.emplace_back(v, 1);
    complements.emplace_back(std::move(e));
  }
  std::vector<Monomial> gens;
  for (const auto& cover : minimal_primes(MonomialIdeal(complements, u))) {
    std::vector<Monomial::Entry> e;
    for (Variable v : cover) e.emplace_back(v, 1);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(gens), u);
}

namespace {

std::vector<Variable> without(const std::vector<Variable>& u, std::size_t k) {
  std::vector<Variable> out = u;
  out.erase(out.begin() + static_cast<long>(k));
  return out;
}

std::size_t require_index(const SimplicialComplex& c, Variable v) {
  auto k = c.index_of(v);
  if (!k) throw PreconditionError("vertex outside the complex universe");
  return *k;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& complex, Variable v) {
  std::size_t k = require_index(complex, v);
  std::vector<Face> out;
  for (Face f : complex.facets())
    if (f >> k & 1U) out.push_back(drop_bit(f, k));
  return SimplicialComplex::from_masks(without(complex.universe(), k), std::move(out));
}

SimplicialComplex deletion(const SimplicialComplex& complex, Variable v) {
  std::size_t k = require_index(complex, v);
  std::vector<Face> out;
  for (Face f : complex.facets()) out.push_back(drop_bit(f & ~(Face{1} << k), k));
  return SimplicialComplex::from_masks(without(complex.universe(), k), std::move(out));
}

SimplicialComplex link_of_face(const SimplicialComplex& complex, SimplicialComplex::Face face) {
  std::vector<Face> out;
  for (Face f : complex.facets())
    if ((face & ~f) == 0) out.push_back(f & ~face);
  return SimplicialComplex::from_masks(complex.universe(), std::move(out));
}

SimplicialComplex cone(const SimplicialComplex& complex, Variable a) {
  std::vector<Variable> u = complex.universe();
  auto k = complex.index_of(a);
  if (k) {
    for (Face f : complex.facets())
      if (f >> *k & 1U) throw PreconditionError("cone apex already lies in a face");
  } else {
    u.push_back(a);
    check_size(u.size());
    k = u.size() - 1;
  }
  std::vector<Face> out;
  for (Face f : complex.facets()) out.push_back(f | (Face{1} << *k));
  return SimplicialComplex::from_masks(std::move(u), std::move(out));
}

}  // namespace liaison
