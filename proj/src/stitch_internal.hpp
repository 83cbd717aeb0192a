#ifndef BICYC_STITCH_INTERNAL_HPP
#define BICYC_STITCH_INTERNAL_HPP

#include <vector>

#include "bicyc/oracle.hpp"
#include "bicyc/params.hpp"

namespace bicyc::detail {

/// Accumulates the edges of a cycle under construction and extracts the
/// final vertex sequence. Every touched vertex must end with degree
/// exactly 2 and the edges must form a single closed walk; anything else
/// is an internal stitch bug and throws.
class CycleBuilder {
 public:
  explicit CycleBuilder(int m);

  void add_edge(Vertex x, Vertex y);

  /// Walks the accumulated 2-regular graph. `expected` is the number of
  /// vertices the cycle must cover.
  std::vector<Vertex> extract(size_t expected) const;

 private:
  int m_;
  std::vector<int> deg_;
  std::vector<std::array<int, 2>> nbr_;
  size_t touched_{0};
};

inline Vertex shift_vertex(const Vertex& v, int k, int m) {
  return Vertex{v.side, mod_norm(v.index + k, m)};
}

std::vector<Vertex> shift_cycle(const std::vector<Vertex>& c, int k, int m);

/// Core zig-zag of the removal construction: lam+1 shifted copies of
/// `cycle` joined through its first two `side`-side edges. lam == 0
/// returns the cycle unchanged. Copy j is shifted by j*shift.
std::vector<Vertex> zigzag_join(const BicirculantParams& ambient,
                                const std::vector<Vertex>& cycle, int shift,
                                int lam, Side side);

/// Number of `side`-`side` edges on the cycle.
int count_side_edges(const std::vector<Vertex>& cycle, Side side);

/// Checks that `cycle` is a hamilton cycle of the subgraph of `sub`
/// induced on the component of `sub` containing `cycle[0]`
/// (delta = gcd(m, sets of sub), component = index class mod delta).
void check_component_cycle(const BicirculantParams& sub,
                           const std::vector<Vertex>& cycle);

/// Hamilton path check on the same component structure.
void check_component_path(const BicirculantParams& sub,
                          const std::vector<Vertex>& path);

/// Multiply all indices by delta (quotient-to-ambient map, component 0).
std::vector<Vertex> scale_indices(const std::vector<Vertex>& seq, int delta);

/// Oracle cycle on the u_0-component of the spoke subgraph H(m;S),
/// searched in the quotient and mapped back. Empty when the oracle
/// exhausts (component not hamiltonian) — never when the budget runs out,
/// which throws Error(OracleFailed).
std::optional<std::vector<Vertex>> spoke_component_cycle(
    const BicirculantParams& p, const SearchBudget& budget);

}  // namespace bicyc::detail

#endif
