#ifndef BICYC_STRUCTURE_HPP
#define BICYC_STRUCTURE_HPP

#include <span>
#include <vector>

#include "bicyc/params.hpp"

namespace bicyc {

/// gcd of m together with every element of every listed set. Empty sets
/// contribute nothing; gcd(m, 0) = m, so an all-zero collection returns m.
int gcd_all(int m, std::initializer_list<std::span<const int>> sets);

inline int gcd_all(const BicirculantParams& p) {
  return gcd_all(p.m(), {std::span<const int>(p.outer_types()),
                         std::span<const int>(p.spoke_types()),
                         std::span<const int>(p.inner_types())});
}

/// Connectivity is pure arithmetic: gcd(m, R, S, T) == 1.
bool is_connected(const BicirculantParams& p);

/// Component structure of a disconnected bicirculant: delta isomorphic
/// pieces, vertex index i lies in component i mod delta, and each piece
/// is isomorphic to the quotient via index division.
struct Decomposition {
  int delta{1};
  std::vector<int> component_of;  // indexed by flat vertex id
  BicirculantParams quotient;

  int component(const Vertex& v) const { return v.index % delta; }
};

Decomposition decompose(const BicirculantParams& p);

/// Map a quotient vertex back into component `comp` of the original.
inline Vertex unquotient_vertex(const Vertex& v, int delta, int comp = 0) {
  return Vertex{v.side, v.index * delta + comp};
}

/// Grid dimensions for stitching one outer and one inner type through the
/// spoke subgraph: lambda+1 = gcd(m,S,b) column components, mu+1 rows each.
struct GridShape {
  int a{0};
  int b{0};
  int lambda{0};
  int mu{0};
};

/// Spokes-only residual: lambda = gcd(m,S,b)-1, mu = gcd(m,S)/gcd(m,S,b)-1.
/// Requires a in R, b in T, both different from m/2.
GridShape grid_shape(const BicirculantParams& p, int a, int b);

/// Rim-augmented residual used by the two-type removal construction:
/// lambda+1 = gcd(m, R\{±a}, S, T) and
/// mu+1 = gcd(m, R\{±a}, S, T\{±b}) / (lambda+1).
GridShape grid_shape_general(const BicirculantParams& p, int a, int b);

/// Number of distinct prime divisors of m (trial division; desk scale).
int prime_power_factor_count(int m);

}  // namespace bicyc

#endif
