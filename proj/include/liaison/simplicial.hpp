#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial_ideal.hpp"

namespace liaison {

// Simplicial complex on an ordered vertex universe (at most 64 vertices),
// stored by its facets as bit masks over universe positions.
// The void complex (no faces) and {∅} are distinct values.
class SimplicialComplex {
 public:
  using Face = std::uint64_t;

  SimplicialComplex() = default;  // void complex on an empty universe
  SimplicialComplex(std::vector<Variable> universe, const std::vector<std::vector<Variable>>& faces);
  static SimplicialComplex from_masks(std::vector<Variable> universe, std::vector<Face> faces);
  static SimplicialComplex void_complex(std::vector<Variable> universe);
  static SimplicialComplex empty_face(std::vector<Variable> universe);
  static SimplicialComplex simplex(std::vector<Variable> universe, const std::vector<Variable>& vertices);

  const std::vector<Variable>& universe() const { return universe_; }
  const std::vector<Face>& facets() const { return facets_; }
  std::vector<std::vector<Variable>> facet_sets() const;

  bool is_void() const { return facets_.empty(); }
  bool is_empty_face_only() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_simplex() const { return facets_.size() == 1; }
  int dimension() const;  // -1 for {∅}, -2 for the void complex
  bool is_pure() const;
  bool contains_face(Face f) const;
  std::vector<Variable> vertices() const;
  std::optional<std::size_t> index_of(Variable v) const;
  Face mask_of(const std::vector<Variable>& vs) const;
  std::vector<Variable> face_vertices(Face f) const;
  std::vector<Face> all_faces() const;

  // Structural equality: same universe (as ordered list) and same facets.
  bool operator==(const SimplicialComplex&) const = default;
  // Key independent of universe order and of vertices absent from every face.
  std::string canonical_key() const;

 private:
  std::vector<Variable> universe_;
  std::vector<Face> facets_;  // sorted antichain
};

// Δ with I = I_Δ (squarefree ideal, universe taken from the ideal).
SimplicialComplex from_ideal(const MonomialIdeal& ideal);
// I_Δ generated by the minimal non-faces.
MonomialIdeal to_ideal(const SimplicialComplex& complex);

// Link and deletion live on the universe with v removed.
SimplicialComplex link(const SimplicialComplex& complex, Variable v);
SimplicialComplex deletion(const SimplicialComplex& complex, Variable v);
SimplicialComplex link_of_face(const SimplicialComplex& complex, SimplicialComplex::Face face);
// Cone with apex a; a is added to the universe when missing and must lie in no face.
SimplicialComplex cone(const SimplicialComplex& complex, Variable a);

// dim H̃_i for i = -1 .. dim Δ. Requires a non-void complex.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex, const Field& field);
bool is_cm_reisner(const SimplicialComplex& complex, const Field& field);

// ---- decomposability ------------------------------------------------------

enum class LeafReason { None, EmptyFace, Simplex, CohenMacaulay };

struct SheddingNode {
  SimplicialComplex complex;
  std::optional<Variable> vertex;
  LeafReason leaf = LeafReason::None;
  bool weak = false;
  std::shared_ptr<const SheddingNode> link_child;
  std::shared_ptr<const SheddingNode> deletion_child;
};
using SheddingCertificate = std::shared_ptr<const SheddingNode>;

struct ShedAttempt {
  bool valid = false;
  std::string reason;
  SheddingCertificate certificate;
};

// Searches vertices in ascending order; memoized per call.
std::optional<SheddingCertificate> is_vertex_decomposable(const SimplicialComplex& complex);
// Forces the first decomposition vertex.
ShedAttempt try_shedding_vertex(const SimplicialComplex& complex, Variable v);
std::optional<SheddingCertificate> is_weakly_vertex_decomposable(const SimplicialComplex& complex,
                                                                 const Field& field = Field::from_environment());

struct ReplayReport {
  bool ok = true;
  std::string failure;
  std::size_t nodes = 0;
};
ReplayReport replay_shedding(const SheddingCertificate& certificate, const Field& field = Field::from_environment());

// Shelling order as facet masks; nullopt when none exists. Throws BudgetExceeded beyond max_facets.
std::optional<std::vector<SimplicialComplex::Face>> is_shellable(const SimplicialComplex& complex,
                                                                 std::size_t max_facets = 10);

}  // namespace liaison
