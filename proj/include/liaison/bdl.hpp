#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/simplicial.hpp"

namespace liaison {

struct BdlChecks {
  bool A_cm = false;
  bool A_g0 = false;
  bool heights_ok = false;
  bool colon_ok = false;
  bool containment_ok = false;
  bool unmixed_ok = false;
  bool decomposition_ok = false;

  std::vector<std::pair<std::string, bool>> list() const;
  bool all() const;
};

// Candidate basic double G-link C = z B + A.
struct BDLStep {
  MonomialIdeal C;
  Variable z;
  MonomialIdeal A;
  MonomialIdeal B;
  bool z_absent = false;
  bool checked = false;
  BdlChecks checks{};
  // Layer shift taking the stored B to P_{b'}(B) after a push (empty when unused).
  std::map<Variable, Variable> relabel{};

  bool verified() const { return checked && checks.all(); }
  std::vector<std::string> failed_checks() const;
};

// A = (σ ∈ G(C) : z ∤ σ), B = C : z.
BDLStep bdl_decompose(const MonomialIdeal& C, Variable z);
BDLStep verify_bdl(BDLStep step, const Field& field = Field::from_environment());

// Witness that no BDL at x_{i,a} exists on P_b(I); throws when the hypotheses fail.
bool guard_no_bad_polarization(const MonomialIdeal& I, Variable x, std::uint32_t a, const PolarizationVector& b);

enum class LiftKind { VerifiedBdl, DecompositionNotBdl };
struct LiftResult {
  BDLStep step;
  LiftKind kind = LiftKind::DecompositionNotBdl;
  bool polar_matches = false;  // stored polar ideals agree with P_b(A) and P_b(zB):z_1
};
LiftResult lift_bdl(const BDLStep& polar_step, const PolarizationVector& b,
                    const Field& field = Field::from_environment());
BDLStep push_bdl(const BDLStep& step, const PolarizationVector& b, const Field& field = Field::from_environment());

struct GlicciChain {
  MonomialIdeal start;
  std::vector<BDLStep> steps;
  MonomialIdeal terminal;
  std::size_t g_link_length() const { return 2 * steps.size(); }
};

struct ChainReport {
  bool ok = true;
  std::string failure;
};

// Depth-first search over multipliers; budget counts verify_bdl calls.
std::optional<GlicciChain> glicci_chain_search(const MonomialIdeal& I, std::size_t budget = 5000,
                                               const Field& field = Field::from_environment());
ChainReport verify_chain(const GlicciChain& chain, const Field& field = Field::from_environment());

struct ConstructiveChain {
  GlicciChain chain;             // BDL chain on P(I)
  SheddingCertificate shedding;  // vertex decomposition of the complex of P(I)
};
ConstructiveChain stable_chain(const MonomialIdeal& I, const Field& field = Field::from_environment());
ConstructiveChain artinian_chain(const MonomialIdeal& I, const Field& field = Field::from_environment());

}  // namespace liaison
