#pragma once

#include <string>
#include <vector>

#include "liaison/field.hpp"
#include "liaison/groebner.hpp"

namespace liaison {

// verified: decided exactly; sufficient: certified by a sufficient condition;
// asserted: caller-supplied; failed: decided negative; unknown: undecided.
enum class CheckStatus { Verified, Sufficient, Asserted, Failed, Unknown };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);
bool is_positive(CheckStatus s);
// Conjunction: failed dominates, then unknown, asserted, sufficient.
CheckStatus conjunction(CheckStatus a, CheckStatus b);

struct StatusResult {
  CheckStatus status = CheckStatus::Unknown;
  std::string method;
};

// Properties of R/I for I = (generators), R the polynomial ring on order.variables().
StatusResult cm_status(const std::vector<Polynomial>& generators, const TermOrder& order,
                       const Field& field = Field::from_environment());
StatusResult unmixed_status(const std::vector<Polynomial>& generators, const TermOrder& order,
                            const Field& field = Field::from_environment());
StatusResult g0_status(const std::vector<Polynomial>& generators, const TermOrder& order);
StatusResult radical_status(const std::vector<Polynomial>& generators, const TermOrder& order);
// Homogeneous input: minimal number of generators equals the height.
bool is_complete_intersection(const std::vector<Polynomial>& generators, const TermOrder& order);
// Exact CM decision for homogeneous ideals: length(R/(I + l)) == e(R/I) for a
// linear system of parameters l. nullopt when no parameters were found.
std::optional<bool> cm_by_multiplicity(const GroebnerBasis& basis);

}  // namespace liaison
