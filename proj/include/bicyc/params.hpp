#ifndef BICYC_PARAMS_HPP
#define BICYC_PARAMS_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicyc {

enum class Side : std::uint8_t { Outer = 0, Inner = 1 };

/// A labelled vertex u_i (outer) or v_i (inner), index taken mod m.
struct Vertex {
  Side side{Side::Outer};
  int index{0};

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex outer_vertex(int i) { return Vertex{Side::Outer, i}; }
inline Vertex inner_vertex(int i) { return Vertex{Side::Inner, i}; }

std::string to_string(const Vertex& v);

enum class EdgeClass : std::uint8_t { Outer = 0, Inner = 1, Spoke = 2 };

/// Edge classification. Outer/inner types are stored as the canonical
/// representative min(t, m-t); spoke types are plain residues mod m.
struct EdgeKind {
  EdgeClass cls{EdgeClass::Outer};
  int type{0};

  friend auto operator<=>(const EdgeKind&, const EdgeKind&) = default;
};

std::string to_string(const EdgeKind& k);

enum class Errc {
  // parameter validation
  NonSymmetricRimSet,
  ZeroInRim,
  MissingZeroSpoke,
  UnequalRimSizes,
  EmptySpokes,
  InvalidRingSize,
  // adjacency / certificates
  NotAnEdge,
  WrongLength,
  RepeatedVertex,
  NonAdjacentStep,
  OuterInnerCountMismatch,
  // parameter surgery
  ShiftNotInS,
  OddM,
  HalfAlreadyPresent,
  AsymmetricDrop,
  NotASubset,
  TypeNotPresent,
  HalfTypeForbidden,
  // search
  DifferentComponents,
  // constructions
  PreconditionViolated,
  BaseCycleInvalid,
  InternalStitchFailure,
  TooFewOuterEdges,
  HypothesisUnmet,
  OracleFailed,
  WrongShape,
  PathInvalid,
  // cli
  SyntaxError,
  SemanticError,
  CycleParamMismatch,
  IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

/// The tuple (m, R, S, T). Residues are stored canonically in [0, m-1],
/// sorted, and R, T are kept as full symmetric sets. Instances are
/// immutable after construction.
class BicirculantParams {
 public:
  /// Validating factory. Rejects asymmetric rims, 0 in a rim, missing
  /// zero spoke, empty S, and |R| != |T|.
  static BicirculantParams make(int m, std::vector<int> outer,
                                std::vector<int> spokes,
                                std::vector<int> inner);

  /// Same checks except regularity: |R| != |T| is allowed. Needed for
  /// subgraphs that arise when rim types are stripped one side at a time.
  static BicirculantParams make_relaxed(int m, std::vector<int> outer,
                                        std::vector<int> spokes,
                                        std::vector<int> inner);

  int m() const { return m_; }
  const std::vector<int>& outer_types() const { return outer_; }
  const std::vector<int>& spoke_types() const { return spokes_; }
  const std::vector<int>& inner_types() const { return inner_; }

  int r() const { return static_cast<int>(outer_.size()); }
  int s() const { return static_cast<int>(spokes_.size()); }
  int degree() const { return r() + s(); }
  bool regular() const { return outer_.size() == inner_.size(); }

  int vertex_count() const { return 2 * m_; }

  bool has_outer(int t) const;
  bool has_inner(int t) const;
  bool has_spoke(int t) const;

  bool valid_vertex(const Vertex& v) const {
    return v.index >= 0 && v.index < m_;
  }

  /// Flat id in [0, 2m): outer i -> i, inner i -> m + i.
  int vertex_id(const Vertex& v) const {
    return (v.side == Side::Outer ? 0 : m_) + v.index;
  }
  Vertex vertex_of(int id) const {
    return id < m_ ? outer_vertex(id) : inner_vertex(id - m_);
  }

  std::vector<Vertex> neighbors(const Vertex& v) const;
  bool adjacent(const Vertex& x, const Vertex& y) const;
  EdgeKind classify_edge(const Vertex& x, const Vertex& y) const;

  /// Replace S by S - c (mod m); c must be in S. The resulting graph is
  /// isomorphic via u_i -> u_i, v_i -> v_{i-c}.
  BicirculantParams shift_spokes(int c) const;

  /// Add outer and inner type m/2 (m even, m/2 not already a rim type).
  BicirculantParams add_half_types() const;

  /// Drop symmetric subsets of rim types; S is untouched. The result may
  /// be disconnected or non-regular.
  BicirculantParams remove_types(const std::vector<int>& outer_drop,
                                 const std::vector<int>& inner_drop) const;

  std::string render() const;

  friend bool operator==(const BicirculantParams&,
                         const BicirculantParams&) = default;

 private:
  BicirculantParams(int m, std::vector<int> outer, std::vector<int> spokes,
                    std::vector<int> inner);

  int m_{1};
  std::vector<int> outer_, spokes_, inner_;
};

/// x mod m in [0, m).
inline int mod_norm(long long x, int m) {
  long long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

/// Canonical rim representative min(t, m-t).
inline int canon_rim(int t, int m) { return std::min(t, m - t); }

}  // namespace bicyc

#endif
