#ifndef BICYC_ORACLE_HPP
#define BICYC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "bicyc/params.hpp"

namespace bicyc {

struct SearchBudget {
  std::uint64_t max_nodes{50'000'000};
  std::int64_t max_millis{60'000};
  std::uint64_t seed{1};
};

/// Edge constraints for exact search: per-class minimum counts and a set
/// of forbidden kinds (edges of those kinds are never used).
struct CycleConstraints {
  int min_outer{0};
  int min_inner{0};
  int min_spoke{0};
  std::set<EdgeKind> forbidden;
};

enum class SearchStatus {
  Found,           // a cycle/path was found (and is returned)
  ExhaustedNone,   // complete search, no solution exists
  BudgetExceeded,  // search stopped early; nothing is known
};

struct SearchResult {
  SearchStatus status{SearchStatus::ExhaustedNone};
  std::optional<std::vector<Vertex>> sequence;
  std::uint64_t nodes{0};

  bool found() const { return status == SearchStatus::Found; }
  bool exhausted() const { return status == SearchStatus::ExhaustedNone; }
};

/// Exact hamilton-cycle search by backtracking with degree and
/// connectivity pruning. Deterministic: fixed extension order.
SearchResult find_cycle_exact(const BicirculantParams& p,
                              const CycleConstraints& constraints = {},
                              const SearchBudget& budget = {});

/// Hamilton path with prescribed endpoints inside the connected component
/// containing x. Throws Error(DifferentComponents) if y lies elsewhere.
SearchResult find_path_between(const BicirculantParams& p, Vertex x, Vertex y,
                               const SearchBudget& budget = {});

/// Randomized rotation-extension search. A returned cycle always passes
/// verify_certificate; empty means the budget ran out, never nonexistence.
std::optional<std::vector<Vertex>> find_cycle_heuristic(
    const BicirculantParams& p, const SearchBudget& budget);

}  // namespace bicyc

#endif
