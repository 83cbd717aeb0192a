#ifndef BICYC_CERTIFICATE_HPP
#define BICYC_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "bicyc/params.hpp"

namespace bicyc {

/// A verified hamilton cycle: the vertex sequence in canonical form
/// (minimum vertex first, lexicographically smaller orientation) plus
/// edge-class usage counts. Every accepted cycle satisfies
/// outer_count == inner_count.
struct CycleCertificate {
  std::vector<Vertex> vertices;
  int outer_count{0};
  int inner_count{0};
  int spoke_count{0};

  friend bool operator==(const CycleCertificate&,
                         const CycleCertificate&) = default;
};

/// Accepts iff the sequence is a hamilton cycle of B(m;R,S,T). Throws
/// Error carrying the first violated condition (WrongLength,
/// RepeatedVertex, NonAdjacentStep, OuterInnerCountMismatch).
CycleCertificate verify_certificate(const BicirculantParams& p,
                                    const std::vector<Vertex>& cycle);

/// Canonical rotation/orientation without the hamilton checks; used for
/// stable output of sub-certificates (component-level cycles).
std::vector<Vertex> canonicalize_cycle(std::vector<Vertex> cycle);

/// Certificate JSON:
///   {"params":"B(...)","cycle":[["u",0],...],"counts":{...}}
std::string certificate_to_json(const BicirculantParams& p,
                                const CycleCertificate& c);

struct ParsedCertificate {
  std::string params_text;
  std::vector<Vertex> cycle;
};

/// Parses certificate JSON; throws Error(SemanticError) on schema issues.
ParsedCertificate certificate_from_json(const std::string& text);

}  // namespace bicyc

#endif
