#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "liaison/bdl.hpp"
#include "liaison/geometric.hpp"
#include "liaison/simplicial.hpp"

namespace liaison::io {

using Json = nlohmann::json;

inline constexpr int kCertificateVersion = 1;

Json bdl_chain_certificate(const GlicciChain& chain, const VariableNames& names,
                           const SheddingCertificate& shedding = nullptr);
Json shedding_certificate(const SheddingCertificate& root, const VariableNames& names);
Json biliaison_chain_certificate(const BiliaisonChain& chain, const VariableNames& names);
Json gvd_tree_certificate(const GvdTree& tree, const TermOrder& base, GvdMode mode, const VariableNames& names);

// Structural validation; throws SchemaError naming the offending path.
void validate_certificate(const Json& doc);

struct CertificateAudit {
  bool ok = false;
  std::string kind;
  CheckStatus status = CheckStatus::Unknown;
  std::vector<std::string> lines;  // per-step report
};
// Validates, rebuilds the payload and re-runs the matching verifier.
CertificateAudit verify_certificate(const Json& doc, const Field& field = Field::from_environment());

// Payload reconstruction (after validation).
struct CertificateRing {
  VariableNames names;
  std::vector<Variable> variables;
};
CertificateRing ring_from_certificate(const Json& doc);
GlicciChain bdl_chain_from_certificate(const Json& doc);
SheddingCertificate shedding_from_certificate(const Json& doc);
BiliaisonChain biliaison_chain_from_certificate(const Json& doc);

}  // namespace liaison::io
