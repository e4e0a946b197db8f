#ifndef EDK_CERTIFICATE_HPP
#define EDK_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "edk/eternal.hpp"
#include "edk/graph.hpp"

namespace edk {

struct CertificateViolation {
    int state = -1;      // family index, -1 for family-level problems
    Vertex attack = -1;  // -1 when not tied to an attack
    std::string reason;
};

struct VerifyResult {
    bool ok = true;
    std::optional<CertificateViolation> violation;  // first failure found
};

/// Checks a certificate against the graph from scratch: every member is a
/// size-q dominating multiset over V(G), and every (member, attack) pair has
/// exactly one response whose successor is a member, holds the attacked
/// vertex, and is reached by the recorded moves, each of length at most k.
/// Only distances, domination and multiset comparisons are used.
VerifyResult verify_certificate(const Graph& g, const EternalCertificate& cert);

/// Configurations are written as sorted arrays of vertex labels.
nlohmann::json configuration_to_json(const Graph& g, const Configuration& c);
Configuration configuration_from_json(const Graph& g, const nlohmann::json& j);

/// {"k", "q", "family": [[labels]], "response": [{"state", "attack", "next", "moves"}]}
nlohmann::json certificate_to_json(const Graph& g, const EternalCertificate& cert);
/// Throws std::invalid_argument on schema problems or unknown labels.
EternalCertificate certificate_from_json(const Graph& g, const nlohmann::json& j);

}  // namespace edk

#endif  // EDK_CERTIFICATE_HPP
