#include <algorithm>

#include "bicyc/constructions.hpp"
#include "stitch_internal.hpp"

// Grid stitching for B(m; {±a}, S, {±b}): the spoke subgraph splits into
// gcd(m,S) isomorphic components arranged as a rows-by-columns grid, rows
// linked by one rim type and columns by the other. A hamilton cycle of the
// u_0-component is cut into prescribed pieces whose shifted copies tile
// the grid and are joined through same-label rim edges.

namespace bicyc {
namespace {

using detail::CycleBuilder;
using detail::shift_vertex;

struct GridOrient {
  int col_shift{0};
  int row_shift{0};
  Side col_side{Side::Outer};
  int n_cols{1};
  int n_rows{1};
  bool axes_swapped{false};
  bool grid_transposed{false};

  Side row_side() const {
    return col_side == Side::Outer ? Side::Inner : Side::Outer;
  }
  void transpose() {
    std::swap(col_shift, row_shift);
    std::swap(n_cols, n_rows);
    col_side = row_side();
    grid_transposed = !grid_transposed;
  }
};

class GridStitcher {
 public:
  GridStitcher(const BicirculantParams& p, GridOrient orient,
               std::vector<Vertex> path, ConstructionTrace& trace)
      : p_(p),
        m_(p.m()),
        o_(orient),
        path_(std::move(path)),
        n_(static_cast<int>(path_.size()) / 2),
        builder_(p.m()),
        trace_(trace) {}

  // offset of grid cell (row i, col j)
  int off(int i, int j) const { return i * o_.row_shift + j * o_.col_shift; }

  Vertex at(int pos, int shift) const {
    return shift_vertex(path_[pos], shift, m_);
  }

  void edge(int pos_x, int pos_y, int shift) {
    builder_.add_edge(at(pos_x, shift), at(pos_y, shift));
  }

  // path edges P[t] -- P[t+1] for t in [from, to)
  void seg(int from, int to, int shift) {
    for (int t = from; t < to; ++t) edge(t, t + 1, shift);
  }

  // the closing edge of the base cycle, x_0 -- y_s
  void closing(int shift) { edge(2 * n_ - 1, 0, shift); }

  void join(int pos, int shift_from, int shift_to) {
    builder_.add_edge(at(pos, shift_from), at(pos, shift_to));
  }

  std::vector<Vertex> run_case1();
  std::vector<Vertex> run_case2(int anchor_pos);

 private:
  const BicirculantParams& p_;
  int m_;
  GridOrient o_;
  std::vector<Vertex> path_;
  int n_;
  CycleBuilder builder_;
  ConstructionTrace& trace_;
};

// Single row: the base cycle has row-type chords. Hamilton paths carved
// around the two chord targets are chained column to column.
std::vector<Vertex> GridStitcher::run_case1() {
  const int lam = o_.n_cols - 1;
  const int last = 2 * n_ - 1;
  const int sigma = path_[0].index;
  const Side yside = o_.row_side();

  auto find_pos = [&](Vertex v) {
    for (int i = 0; i < 2 * n_; ++i)
      if (path_[i] == v) return i;
    fail(Errc::InternalStitchFailure,
         "chord target " + to_string(v) + " missing from the base component");
  };
  int q1 = find_pos(Vertex{yside, mod_norm(sigma - o_.row_shift, m_)});
  int q2 = find_pos(Vertex{yside, mod_norm(sigma + o_.row_shift, m_)});
  if (q1 > q2) std::swap(q1, q2);  // orientation swap of the chord type

  trace_.note("case 1: chord positions " + std::to_string(q1) + ", " +
              std::to_string(q2) + " on a base path of " +
              std::to_string(2 * n_) + " vertices");

  // hamilton path from x_0 to the predecessor of the far chord target
  auto piece_a = [&](int shift) {
    seg(q2, last, shift);
    builder_.add_edge(at(q2, shift), at(0, shift));  // chord
    seg(0, q2 - 1, shift);
  };
  // hamilton path between the neighbors of the near chord target
  auto piece_d = [&](int shift) {
    seg(1, q1, shift);
    builder_.add_edge(at(q1, shift), at(0, shift));  // chord
    closing(shift);
    seg(q1 + 1, last, shift);
  };
  // the two spanning pieces of a middle column
  auto piece_mid = [&](int shift) {
    seg(q1 + 1, q2 - 1, shift);  // between the chord targets
    seg(q2, last, shift);
    builder_.add_edge(at(q2, shift), at(0, shift));
    builder_.add_edge(at(0, shift), at(q1, shift));
    seg(1, q1, shift);
  };

  piece_a(off(0, 0));
  for (int j = 1; j < lam; ++j) piece_mid(off(0, j));
  if (lam % 2 == 0)
    piece_d(off(0, lam));
  else
    piece_a(off(0, lam));

  for (int j = 0; j < lam; ++j) {
    int p1 = (j % 2 == 0) ? last : 1;       // x_0 / x_t
    int p2 = (j % 2 == 0) ? q2 - 1 : q1 + 1;  // predecessor / successor of the chords
    join(p1, off(0, j), off(0, j + 1));
    join(p2, off(0, j), off(0, j + 1));
  }
  return builder_.extract(static_cast<size_t>(2) * m_);
}

// Several rows per column: vertical chains inside the columns, the left
// and right columns close them off, and the detached column-side vertices
// ride horizontal chains.
std::vector<Vertex> GridStitcher::run_case2(int z) {
  const int lam = o_.n_cols - 1;
  const int mu = o_.n_rows - 1;
  const int last = 2 * n_ - 1;  // x_0
  const int y0 = last - 1;
  const int x1 = last - 2;
  const int yh = z - 1;
  const int yk = z + 1;

  trace_.note("case 2: grid " + std::to_string(mu + 1) + " rows x " +
              std::to_string(lam + 1) + " cols, anchor position " +
              std::to_string(z));

  // middle columns
  for (int j = 1; j < lam; ++j) {
    seg(0, x1, off(0, j));
    edge(y0, last, off(0, j));
    for (int i = 1; i < mu; ++i) {
      seg(0, yh, off(i, j));
      seg(yk, y0, off(i, j));
    }
    if (mu % 2 == 0) {
      seg(0, yh, off(mu, j));
      seg(yk, last, off(mu, j));
      closing(off(mu, j));
    } else {
      seg(0, y0, off(mu, j));
    }
  }

  // column 0
  seg(0, last, off(0, 0));
  for (int i = 1; i < mu; ++i) {
    seg(0, yh, off(i, 0));
    seg(z, last, off(i, 0));
  }
  if (mu % 2 == 0) {
    seg(0, yh, off(mu, 0));
    seg(z, last, off(mu, 0));
    closing(off(mu, 0));
  } else {
    seg(0, last, off(mu, 0));
  }

  // column lam
  for (int i = 1; i < mu; ++i) {
    seg(0, yh, off(i, lam));
    closing(off(i, lam));
    seg(z, y0, off(i, lam));
  }
  if (lam % 2 == 0) {
    seg(0, x1, off(0, lam));
    edge(y0, last, off(0, lam));
    closing(off(0, lam));
  } else {
    seg(0, y0, off(0, lam));
    closing(off(0, lam));
  }
  if (mu % 2 == 0) {
    seg(0, yh, off(mu, lam));
    seg(z, last, off(mu, lam));
    closing(off(mu, lam));
  } else {
    seg(0, y0, off(mu, lam));
    closing(off(mu, lam));
  }

  // vertical joins
  for (int i = 0; i < mu; ++i) {
    const bool even = (i % 2 == 0);
    for (int j = 1; j < lam; ++j) {
      join(even ? 0 : yh, off(i, j), off(i + 1, j));
      join(even ? y0 : yk, off(i, j), off(i + 1, j));
    }
    join(even ? 0 : yh, off(i, 0), off(i + 1, 0));
    join(even ? y0 : yh, off(i, lam), off(i + 1, lam));
  }

  // horizontal chains through the detached vertices
  for (int i = 1; i < mu; ++i) {
    for (int j = 0; j < lam; ++j) {
      join(last, off(i, j), off(i, j + 1));
      join(z, off(i, j), off(i, j + 1));
    }
  }
  for (int j = 0; j < lam; ++j)
    join(mu % 2 == 1 ? last : z, off(mu, j), off(mu, j + 1));

  // row-0 closures and the chain through the middle columns
  join(last, off(0, 0), off(0, 1));
  if (lam >= 2) {
    const int alpha = (lam % 2 == 1) ? last : x1;
    join(alpha, off(0, lam - 1), off(0, lam));
    for (int j = 1; j + 1 < lam; ++j)
      join(j % 2 == 0 ? last : x1, off(0, j), off(0, j + 1));
  }
  return builder_.extract(static_cast<size_t>(2) * m_);
}

int single_rim_type(const BicirculantParams& p, bool outer) {
  const auto& rim = outer ? p.outer_types() : p.inner_types();
  if (rim.empty() || rim.size() > 2 ||
      (rim.size() == 2 && rim[1] != mod_norm(-rim[0], p.m())))
    fail(Errc::PreconditionViolated,
         std::string(outer ? "outer" : "inner") +
             " rim must consist of a single type");
  return rim[0];
}

}  // namespace

StitchResult stitch_haar(const BicirculantParams& p,
                         const std::vector<Vertex>& base, int anchor_pos) {
  const int m = p.m();
  const int a = single_rim_type(p, true);
  const int b = single_rim_type(p, false);
  if (p.s() < 2) fail(Errc::PreconditionViolated, "need |S| >= 2");
  const int g = gcd_all(m, {std::span<const int>(p.spoke_types())});
  if (g <= 1)
    fail(Errc::PreconditionViolated, "spoke subgraph is connected");
  if (!is_connected(p))
    fail(Errc::PreconditionViolated, "graph is disconnected");

  auto spokes_only = p.remove_types(p.outer_types(), p.inner_types());
  detail::check_component_cycle(spokes_only, base);
  if (mod_norm(base.front().index, g) != 0)
    fail(Errc::BaseCycleInvalid, "base cycle must lie in the u_0 component");

  ConstructionTrace trace;
  StitchPlan plan;

  const int ga = std::gcd(g, a);
  const int gb = std::gcd(g, b);
  std::vector<GridOrient> candidates;
  if (gb >= 2) candidates.push_back({a, b, Side::Outer, gb, g / gb, false, false});
  if (ga >= 2) candidates.push_back({b, a, Side::Inner, ga, g / ga, true, false});
  if (candidates.empty())
    fail(Errc::PreconditionViolated,
         "both rim types are coprime to gcd(m,S)");

  // settle parity and reject half-type axes that would reuse an edge
  auto settle = [m](GridOrient o) -> std::optional<GridOrient> {
    if (o.n_rows == 1) {
      if (m % 2 == 0 && o.row_shift == m / 2) return std::nullopt;
    } else if ((o.n_cols - 1) % 2 == 1 && (o.n_rows - 1) % 2 == 0) {
      o.transpose();
    }
    if (m % 2 == 0) {
      if (o.col_shift == m / 2 && o.n_cols != 2) return std::nullopt;
      if (o.n_rows > 1 && o.row_shift == m / 2 && o.n_rows != 2)
        return std::nullopt;
    }
    return o;
  };

  std::optional<GridOrient> settled;
  for (const GridOrient& cand : candidates)
    if ((settled = settle(cand))) break;
  if (!settled)
    fail(Errc::PreconditionViolated,
         "no usable grid orientation (half-type degeneracy)");
  GridOrient o = *settled;
  if (o.axes_swapped)
    trace.note("rim roles swapped: the outer type carries the grid");
  if (o.grid_transposed) trace.note("grid transposed to fix the parity pattern");
  const bool case1 = (o.n_rows == 1);

  // base path: cut the component cycle at an edge into the column side
  std::vector<Vertex> cyc = canonicalize_cycle(base);
  const int len = static_cast<int>(cyc.size());
  int cut = -1;
  for (int i = 0; i < len; ++i)
    if (cyc[i].side == o.col_side) {
      cut = i;
      break;
    }
  std::vector<Vertex> path;
  path.reserve(len);
  for (int k = 1; k <= len; ++k) path.push_back(cyc[(cut + k) % len]);

  const int n = len / 2;
  int z = anchor_pos;
  if (z < 0) z = 2 * ((n - 1) / 2) + 1;
  if (z % 2 != 1 || z < 1 || z > 2 * n - 3)
    fail(Errc::PreconditionViolated,
         "anchor position must be an interior column-side index");

  trace.tag = case1 ? "haar-grid-case1" : "haar-grid-case2";
  GridStitcher stitcher(p, o, path, trace);
  auto cycle = case1 ? stitcher.run_case1() : stitcher.run_case2(z);
  StitchResult out;
  out.certificate = verify_certificate(p, cycle);
  if (detail::count_side_edges(out.certificate.vertices, Side::Outer) < 2)
    fail(Errc::InternalStitchFailure, "emitted cycle lacks two outer edges");

  plan.shape = GridShape{a, b, o.n_cols - 1, o.n_rows - 1};
  plan.axes_swapped = o.axes_swapped;
  plan.grid_transposed = o.grid_transposed;
  plan.base_path = std::move(path);
  plan.anchor_pos = case1 ? -1 : z;
  trace.note(plan.to_string());
  out.trace = std::move(trace);
  return out;
}

}  // namespace bicyc
