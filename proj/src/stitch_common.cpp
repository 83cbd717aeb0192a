#include "stitch_internal.hpp"

#include <algorithm>
#include <array>

#include "bicyc/structure.hpp"

namespace bicyc {

std::string ConstructionTrace::to_string() const {
  std::string out = tag;
  for (const auto& line : log) {
    out += "\n  ";
    out += line;
  }
  return out;
}

std::string StitchPlan::to_string() const {
  std::string out = "grid " + std::to_string(shape.lambda + 1) + "x" +
                    std::to_string(shape.mu + 1) + " (lambda=" +
                    std::to_string(shape.lambda) + ", mu=" +
                    std::to_string(shape.mu) + ")";
  if (axes_swapped) out += ", axes swapped";
  if (grid_transposed) out += ", grid transposed";
  if (anchor_pos >= 0)
    out += ", anchor " + bicyc::to_string(base_path[anchor_pos]) + " at " +
           std::to_string(anchor_pos);
  return out;
}

}  // namespace bicyc

#include "bicyc/constructions.hpp"

namespace bicyc::detail {

CycleBuilder::CycleBuilder(int m) : m_(m), deg_(2 * m, 0), nbr_(2 * m) {}

void CycleBuilder::add_edge(Vertex x, Vertex y) {
  auto id = [this](const Vertex& v) {
    return (v.side == Side::Outer ? 0 : m_) + v.index;
  };
  if (x == y)
    fail(Errc::InternalStitchFailure, "loop edge at " + to_string(x));
  int ix = id(x), iy = id(y);
  for (int v : {ix, iy}) {
    if (deg_[v] == 0) ++touched_;
    if (deg_[v] >= 2)
      fail(Errc::InternalStitchFailure,
           "degree overflow at " +
               to_string(v < m_ ? outer_vertex(v) : inner_vertex(v - m_)));
  }
  if (deg_[ix] > 0 && (nbr_[ix][0] == iy || (deg_[ix] > 1 && nbr_[ix][1] == iy)))
    fail(Errc::InternalStitchFailure,
         "duplicate edge " + to_string(x) + " -- " + to_string(y));
  nbr_[ix][deg_[ix]++] = iy;
  nbr_[iy][deg_[iy]++] = ix;
}

std::vector<Vertex> CycleBuilder::extract(size_t expected) const {
  if (touched_ != expected)
    fail(Errc::InternalStitchFailure,
         "cycle touches " + std::to_string(touched_) + " vertices, expected " +
             std::to_string(expected));
  int start = -1;
  for (int v = 0; v < 2 * m_; ++v)
    if (deg_[v] > 0) {
      start = v;
      break;
    }
  if (start < 0) fail(Errc::InternalStitchFailure, "no edges accumulated");

  std::vector<Vertex> out;
  out.reserve(expected);
  int prev = -1, cur = start;
  do {
    if (deg_[cur] != 2)
      fail(Errc::InternalStitchFailure,
           "open end at vertex id " + std::to_string(cur));
    out.push_back(cur < m_ ? outer_vertex(cur) : inner_vertex(cur - m_));
    int next = nbr_[cur][0] == prev ? nbr_[cur][1] : nbr_[cur][0];
    prev = cur;
    cur = next;
  } while (cur != start);
  if (out.size() != expected)
    fail(Errc::InternalStitchFailure,
         "walk closed after " + std::to_string(out.size()) + " of " +
             std::to_string(expected) + " vertices");
  return out;
}

std::vector<Vertex> shift_cycle(const std::vector<Vertex>& c, int k, int m) {
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (const Vertex& v : c) out.push_back(shift_vertex(v, k, m));
  return out;
}

int count_side_edges(const std::vector<Vertex>& cycle, Side side) {
  int count = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Vertex& x = cycle[i];
    const Vertex& y = cycle[(i + 1) % cycle.size()];
    if (x.side == side && y.side == side) ++count;
  }
  return count;
}

std::vector<Vertex> zigzag_join(const BicirculantParams& ambient,
                                const std::vector<Vertex>& cycle, int shift,
                                int lam, Side side) {
  if (lam == 0) return cycle;
  const int m = ambient.m();
  const int n = static_cast<int>(cycle.size());

  // the first two side-side edges; e1 = (ws, w0), e2 = (wh, wk)
  int i1 = -1, i2 = -1;
  for (int i = 0; i < n; ++i) {
    if (cycle[i].side == side && cycle[(i + 1) % n].side == side) {
      if (i1 < 0) {
        i1 = i;
      } else {
        i2 = i;
        break;
      }
    }
  }
  if (i2 < 0)
    fail(Errc::TooFewOuterEdges,
         std::string("component cycle needs two ") +
             (side == Side::Outer ? "outer" : "inner") + " edges");

  // reindex so the walk starts at w0 just past e1
  auto at = [&](int k) { return cycle[(i1 + 1 + k) % n]; };
  const int cut = (i2 - (i1 + 1) + n) % n;  // e2 = (at(cut), at(cut+1))
  const Vertex w0 = at(0), ws = at(n - 1), wh = at(cut), wk = at(cut + 1);

  CycleBuilder builder(m);
  // piece helpers: edges of the walk at(.) with one or two edges removed
  auto emit_minus_e1 = [&](int off) {
    for (int k = 0; k + 1 < n; ++k)
      builder.add_edge(shift_vertex(at(k), off, m),
                       shift_vertex(at(k + 1), off, m));
  };
  auto emit_minus_e2 = [&](int off) {
    for (int k = 0; k < n; ++k) {
      if (k == cut) continue;
      builder.add_edge(shift_vertex(at(k), off, m),
                       shift_vertex(at((k + 1) % n), off, m));
    }
  };
  auto emit_arcs = [&](int off) {
    for (int k = 0; k + 1 < n; ++k) {
      if (k == cut) continue;
      builder.add_edge(shift_vertex(at(k), off, m),
                       shift_vertex(at(k + 1), off, m));
    }
  };

  emit_minus_e1(0);
  for (int j = 1; j < lam; ++j) emit_arcs(j * shift);
  if (lam % 2 == 1)
    emit_minus_e1(lam * shift);
  else
    emit_minus_e2(lam * shift);

  for (int j = 0; j < lam; ++j) {
    const auto pair = (j % 2 == 0) ? std::array<Vertex, 2>{w0, ws}
                                   : std::array<Vertex, 2>{wh, wk};
    for (const Vertex& w : pair)
      builder.add_edge(shift_vertex(w, j * shift, m),
                       shift_vertex(w, (j + 1) * shift, m));
  }
  return builder.extract(static_cast<size_t>(lam + 1) * n);
}

namespace {

void check_component_sequence(const BicirculantParams& sub,
                              const std::vector<Vertex>& seq, bool closed) {
  if (seq.size() < (closed ? 3u : 2u))
    fail(closed ? Errc::BaseCycleInvalid : Errc::PathInvalid,
         "sequence too short");
  const int delta = gcd_all(sub);
  const int comp = mod_norm(seq.front().index, delta);
  const size_t comp_size = static_cast<size_t>(2 * sub.m() / delta);
  if (seq.size() != comp_size)
    fail(closed ? Errc::BaseCycleInvalid : Errc::PathInvalid,
         "covers " + std::to_string(seq.size()) + " vertices, component has " +
             std::to_string(comp_size));
  std::vector<char> seen(2 * sub.m(), 0);
  for (const Vertex& v : seq) {
    if (!sub.valid_vertex(v) || mod_norm(v.index, delta) != comp)
      fail(closed ? Errc::BaseCycleInvalid : Errc::PathInvalid,
           to_string(v) + " outside the component");
    int id = sub.vertex_id(v);
    if (seen[id]++)
      fail(closed ? Errc::BaseCycleInvalid : Errc::PathInvalid,
           "repeated " + to_string(v));
  }
  const size_t steps = closed ? seq.size() : seq.size() - 1;
  for (size_t i = 0; i < steps; ++i) {
    const Vertex& x = seq[i];
    const Vertex& y = seq[(i + 1) % seq.size()];
    if (!sub.adjacent(x, y))
      fail(closed ? Errc::BaseCycleInvalid : Errc::PathInvalid,
           "step " + std::to_string(i) + ": " + to_string(x) + " -- " +
               to_string(y) + " not an edge of the subgraph");
  }
}

}  // namespace

void check_component_cycle(const BicirculantParams& sub,
                           const std::vector<Vertex>& cycle) {
  check_component_sequence(sub, cycle, /*closed=*/true);
}

void check_component_path(const BicirculantParams& sub,
                          const std::vector<Vertex>& path) {
  check_component_sequence(sub, path, /*closed=*/false);
}

std::vector<Vertex> scale_indices(const std::vector<Vertex>& seq, int delta) {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (const Vertex& v : seq) out.push_back(Vertex{v.side, v.index * delta});
  return out;
}

std::optional<std::vector<Vertex>> spoke_component_cycle(
    const BicirculantParams& p, const SearchBudget& budget) {
  const int g = gcd_all(p.m(), {std::span<const int>(p.spoke_types())});
  std::vector<int> s_over_g;
  for (int c : p.spoke_types()) s_over_g.push_back(c / g);
  auto quotient =
      BicirculantParams::make_relaxed(p.m() / g, {}, std::move(s_over_g), {});
  auto res = find_cycle_exact(quotient, {}, budget);
  if (res.status == SearchStatus::BudgetExceeded)
    fail(Errc::OracleFailed, "budget exceeded on spoke component");
  if (!res.found()) return std::nullopt;
  return scale_indices(*res.sequence, g);
}

}  // namespace bicyc::detail
