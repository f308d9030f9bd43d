#pragma once

// JSON forms of certificates and verdicts, and re-verification of the
// serialized forms against a fresh run of the engine.

#include <optional>
#include <string>

#include "json.hpp"

#include "factorbench/avoidance.hpp"
#include "factorbench/factor.hpp"
#include "factorbench/toughness.hpp"

namespace factorbench {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json set_json(VertexMask s);
[[nodiscard]] Json edges_json(const std::vector<Edge>& edges);

/// {verdict: "exists"|"not-exists", factorEdges?, S?, T?, delta?}
[[nodiscard]] Json certificate_json(const FactorCertificate& cert);
/// Star-factor variant: adds stars: [{center, leaves}] when a forest is given.
[[nodiscard]] Json star_certificate_json(const FactorCertificate& cert, const std::optional<StarForest>& forest);
[[nodiscard]] Json toughness_json(const ToughnessReport& report);
[[nodiscard]] Json deletion_json(const DeletionSpec& spec);
[[nodiscard]] DeletionSpec parse_deletion(const Json& j);

/// {theorem, params, premises, premisesHold, conclusion, outcome, routes,
///  counterexample?, witnesses, deletionsChecked, graph6}
[[nodiscard]] Json verdict_json(const AvoidanceVerdict& v, const Graph& g);

/// Re-checks a certificate for an [a,b]-factor question on g. Returns an
/// empty string when the certificate holds, else the reason.
[[nodiscard]] std::string reverify_certificate(const Graph& g, int a, int b, const Json& cert);

/// Re-checks a serialized verdict from its graph6 field. A counterexample is
/// replayed on the deleted graph; otherwise the check is run again and must
/// reproduce the recorded outcome. Empty string on success.
[[nodiscard]] std::string reverify_verdict(const Json& verdict, const AvoidOptions& opt = {});

}  // namespace factorbench
