#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liaison/groebner.hpp"
#include "liaison/ideal_status.hpp"

namespace liaison {

// ---- geometric polarization --------------------------------------------------

enum class GbStatus { Unknown, IsGb, NotGb };
enum class NzdStatus { Unknown, Nonzerodivisor, Zerodivisor };
std::string to_string(GbStatus s);
std::string to_string(NzdStatus s);

struct GeoPolarization {
  GroebnerBasis source;            // G under the y-compatible order <
  Variable y;
  Variable y_primed;
  TermOrder induced;               // the induced order on R[y']
  std::vector<Polynomial> polarized{};  // P_y(g) for g in G, same positions
  bool reduced = false;
  GbStatus gb_status = GbStatus::Unknown;
  NzdStatus nzd_status = NzdStatus::Unknown;
  // Evidence gathered by decide_gb_status.
  std::string method{};
  std::optional<MonomialIdeal> partial_initial{};      // J' = (in P_y(g))
  std::optional<MonomialIdeal> recomputed_initial{};   // in of the ideal (P_y(G))
  std::vector<long long> series_source{};              // HS of R/I
  std::vector<long long> series_scaled_polarized{};    // (1 - t) HS of R'/I'
  bool methods_agree = true;
};

// r_0 + y r_1 + sum_{i>=2} y y'^{i-1} r_i.
Polynomial geo_polarize_poly(const Polynomial& g, Variable y, Variable y_primed);
GeoPolarization geo_polarize_gb(const GroebnerBasis& G, Variable y);

enum class DecisionMethod { Recompute, Hilbert };
GeoPolarization decide_gb_status(GeoPolarization gp, DecisionMethod method = DecisionMethod::Recompute,
                                 int series_degree = 12);
// Element of (I' : (y - y')) outside I', reduced modulo I'; nullopt when y - y' is a nonzerodivisor.
std::optional<Polynomial> zerodivisor_witness(const GeoPolarization& gp);
bool uniform_y_degree(const GroebnerBasis& G, Variable y);
GeoPolarization reduced_polarization(const GeoPolarization& gp);

// ---- geometric vertex decomposition -----------------------------------------

// g = y d + r with r free of y (d may involve y when deg_y g > 1); h free of y.
struct YSplit {
  std::vector<Polynomial> with_y;
  std::vector<Polynomial> d;
  std::vector<Polynomial> r;
  std::vector<Polynomial> h;
};
YSplit split_at(const std::vector<Polynomial>& basis, Variable y);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct GVD {
  GroebnerBasis I;
  Variable y;
  std::vector<Polynomial> in_y_generators{};  // y q_i, h_j
  GroebnerBasis C;
  GroebnerBasis N;
  YSplit split{};
  Tri nondegenerate = Tri::Unknown;
  std::string nondegeneracy_method{};
};

// I must be a Gröbner basis under a y-compatible order with deg_y <= 1 throughout.
GVD gvd(const GroebnerBasis& I, Variable y);
GVD gvd(const std::vector<Polynomial>& generators, Variable y, const TermOrder& order);

enum class GvdMode { Plain, Weak };
enum class Outcome { Success, Failure, Unknown };
std::string to_string(Outcome o);

struct GvdTreeNode {
  std::vector<Polynomial> ideal;  // reduced Gröbner basis
  std::vector<Variable> ring;
  bool leaf = false;
  std::optional<Variable> y;
  Outcome outcome = Outcome::Unknown;
  CheckStatus status = CheckStatus::Unknown;  // weakest certificate level used
  std::string reason;
  std::map<std::string, CheckStatus> checks;
  std::shared_ptr<const GvdTreeNode> c_child;
  std::shared_ptr<const GvdTreeNode> n_child;  // plain mode only
};
using GvdTree = std::shared_ptr<const GvdTreeNode>;

// Orders at each node are product(y; base restricted); base supplies the tail.
GvdTree is_geometrically_vertex_decomposable(const std::vector<Polynomial>& generators, const TermOrder& base,
                                             GvdMode mode, const Field& field = Field::from_environment());
// Re-derives every node from its stored ideal; returns the weakest status or failed.
CheckStatus replay_gvd_tree(const GvdTree& tree, GvdMode mode, const TermOrder& base,
                            const Field& field = Field::from_environment());

// ---- elementary G-biliaison ---------------------------------------------------

struct BiliaisonStep {
  TermOrder order;               // ring and y-compatible order of I
  std::vector<Polynomial> I;     // Gröbner basis of I
  Variable y;
  std::vector<Polynomial> D;     // C_{y,I} or D
  std::vector<Polynomial> N;
  int shift = 1;
  Polynomial witness_v;
  Polynomial witness_d;
  std::map<std::string, CheckStatus> checks{};
  std::optional<Variable> y_primed{};          // set when obtained by descent
  std::vector<Polynomial> polarized_basis{};   // P_y(G) when descended

  CheckStatus status() const;
};

// Caller-supplied assertions upgrade undecided checks (by name) to 'asserted'.
BiliaisonStep biliaison_from_gvd(const GVD& g, const std::set<std::string>& assertions = {},
                                 const Field& field = Field::from_environment());
BiliaisonStep descend_biliaison(const BiliaisonStep& upstairs, const GeoPolarization& gp,
                                const std::set<std::string>& assertions = {},
                                const Field& field = Field::from_environment());
// Recomputes all checks of a step from I, y, D, N and the witness.
std::map<std::string, CheckStatus> audit_biliaison_step(const BiliaisonStep& step,
                                                        const std::set<std::string>& assertions = {},
                                                        const Field& field = Field::from_environment());

struct BiliaisonChain {
  std::vector<BiliaisonStep> steps;
};

struct ChainVerdict {
  CheckStatus status = CheckStatus::Verified;
  std::vector<std::string> problems;
  std::vector<CheckStatus> step_status;
  bool terminal_complete_intersection = false;
};
ChainVerdict verify_biliaison_chain(const BiliaisonChain& chain, const Field& field = Field::from_environment());

// Builds one step at y: a plain GVD when the Gröbner basis is linear in y,
// otherwise geometric polarization followed by descent.
BiliaisonStep biliaison_at(const std::vector<Polynomial>& generators, const TermOrder& order, Variable y,
                           const std::set<std::string>& assertions = {},
                           const Field& field = Field::from_environment());

}  // namespace liaison
