#ifndef BICYC_DISPATCHER_HPP
#define BICYC_DISPATCHER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicyc/certificate.hpp"
#include "bicyc/constructions.hpp"
#include "bicyc/oracle.hpp"
#include "bicyc/params.hpp"
#include "bicyc/structure.hpp"

namespace bicyc {

enum class Verdict {
  Hamiltonian,
  NonHamiltonian,
  Disconnected,
  Unknown,
};

enum class NonHamiltonianReason {
  K2,
  AlspachGP,
  ExhaustiveSearch,
};

struct Outcome {
  Verdict verdict{Verdict::Unknown};
  std::optional<CycleCertificate> certificate;   // Hamiltonian only
  std::optional<ConstructionTrace> trace;        // construction route
  std::string method;                            // short route tag
  std::optional<NonHamiltonianReason> reason;    // NonHamiltonian only
  std::optional<Decomposition> decomposition;    // Disconnected only
  std::string note;

  std::string to_json(const BicirculantParams& p) const;
};

struct ClassifyOptions {
  SearchBudget budget{};
  bool prefer_oracle{false};
};

/// Strategy cascade: disconnected, known exceptions, small rings, spanning
/// spoke cycle, single-spoke induction, half-type construction, the
/// pipeline, spanning four-valent subgraph, exact search, heuristic.
Outcome classify(const BicirculantParams& p, const ClassifyOptions& opts = {});

struct Theorem13Witness {
  bool applicable{false};
  bool haar_connected{false};
  int spoke_i{0};  // witness spoke pair c_i, c_j with
  int spoke_j{0};  // gcd(m, R, T, c_i - c_j) = 1
  int difference{0};
};

/// True iff m has at most three distinct prime divisors; for applicable
/// connected inputs with |S| >= 3 the witness names a connected spanning
/// sub-bicirculant using at most two spoke types.
Theorem13Witness theorem13_applicable(const BicirculantParams& p);

struct SweepOptions {
  int m_max{10};
  int d_max{5};
  int jobs{1};
  SearchBudget budget{};
  bool prefer_oracle{false};
  /// cross-check construction verdicts against the exact oracle up to
  /// this ring size (0 disables)
  int agreement_m_max{12};
};

struct SweepReport {
  std::uint64_t universe_size{0};
  std::map<std::string, std::uint64_t> verdict_histogram;
  std::vector<std::string> exceptions;  // non-hamiltonian parameter strings
  std::vector<std::string> unknown;
  std::vector<std::string> agreement_failures;
  std::uint64_t agreement_checked{0};

  std::string to_json() const;
};

/// Enumerates every valid parameter set with m <= m_max, d <= d_max, one
/// representative per spoke-shift/negation class, classifies each, and
/// tallies the outcomes.
SweepReport sweep(const SweepOptions& opts);

/// The canonical parameter enumeration used by sweep (exposed for tests).
std::vector<BicirculantParams> enumerate_universe(int m_max, int d_max);

}  // namespace bicyc

#endif
