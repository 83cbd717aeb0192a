#ifndef BICYC_CONSTRUCTIONS_HPP
#define BICYC_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicyc/certificate.hpp"
#include "bicyc/oracle.hpp"
#include "bicyc/params.hpp"
#include "bicyc/structure.hpp"

namespace bicyc {

/// Record of which construction ran and the choices it made. Stage lines
/// are human-readable; rerunning the operation on the same inputs
/// reproduces both the trace and the certificate.
struct ConstructionTrace {
  std::string tag;
  std::vector<std::string> log;

  void note(std::string line) { log.push_back(std::move(line)); }
  std::string to_string() const;
};

struct StitchResult {
  CycleCertificate certificate;
  ConstructionTrace trace;
};

/// Anchor data chosen on the base cycle of the grid stitcher.
struct StitchPlan {
  GridShape shape;
  bool axes_swapped{false};      // roles of the two rim types exchanged
  bool grid_transposed{false};   // rows/columns exchanged for parity
  std::vector<Vertex> base_path; // from the row-side origin to the column-side end
  int anchor_pos{-1};            // position of the detached column-side vertex

  std::string to_string() const;
};

/// Joins hamilton cycles of the spoke-subgraph components of
/// B(m; {±a}, S, {±b}) into a hamilton cycle of the whole graph.
/// `base` must be a hamilton cycle of the spoke component containing u_0.
/// The emitted cycle uses only spokes, outer type a and inner type b, and
/// contains at least two outer edges. `anchor_pos` overrides the detached
/// vertex position on the base path (odd index; tests use this to force
/// anchor coincidences).
StitchResult stitch_haar(const BicirculantParams& p,
                         const std::vector<Vertex>& base,
                         int anchor_pos = -1);

/// Two-type removal stitching: given a hamilton cycle with at least two
/// outer edges in the u_0-component of H = p minus types ±a, ±b, produces
/// a hamilton cycle of p. Only the component-0 entry of `component_cycles`
/// is consumed; shifted copies cover the remaining components. When H is
/// connected the supplied cycle is returned as-is.
StitchResult stitch_removal(
    const BicirculantParams& p, int a, int b,
    const std::map<int, std::vector<Vertex>>& component_cycles);

/// Iterative pipeline: grid-stitch the first rim pair over the spoke
/// subgraph, then fold the remaining rim pairs back in one removal step at
/// a time; for an odd rim count the final half-type pair is handled by the
/// doubling lift. Component cycles come from the exact oracle.
StitchResult pipeline_combination(const BicirculantParams& p,
                                  const SearchBudget& budget = {});

/// Doubling traversal: walk a hamilton path of one component of
/// H = p minus type-m/2 rims, cross a type-m/2 edge, walk the shifted copy
/// backwards, cross back. Input may be a path or a cycle (used as a path).
/// For connected p the result is a hamilton cycle of p.
CycleCertificate k2_lift(const std::vector<Vertex>& path_or_cycle,
                         const BicirculantParams& p);

/// Construction for m even, |S| >= 3, m/2 in both rims: either an oracle
/// cycle on the spanning spoke subgraph, the two-component doubling lift,
/// or the zig-zag over the components of B(m; {m/2}, S, {m/2}).
StitchResult half_type_construct(const BicirculantParams& p,
                                 const SearchBudget& budget = {});

/// Outcome of the single-spoke classifier.
struct S1Outcome {
  enum class Kind {
    Cycle,                 // verified hamilton cycle produced
    AlspachException,      // canonical GP(m,2), m = 5 (mod 6)
    ProvenNonHamiltonian,  // exhaustive search found no cycle
    CannotApply,           // outside the operation's scope (K2, disconnected)
    Budget,                // oracle budget ran out
  };
  Kind kind{Kind::CannotApply};
  std::optional<StitchResult> result;
  std::string detail;
};

/// |S| = 1 classifier: cubic base cases by oracle with exception
/// recognition, odd degrees by removal induction, even degrees by
/// stripping the forced m/2 types and lifting.
S1Outcome s1_classify_construct(const BicirculantParams& p,
                                const SearchBudget& budget = {});

/// Canonical Alspach generalized Petersen recognition: S = {0},
/// rims {±1} and {±2} in either order, m = 5 (mod 6), m >= 5.
bool is_canonical_alspach_gp(const BicirculantParams& p);

}  // namespace bicyc

#endif
