#include <algorithm>
#include <numeric>

#include "bicyc/constructions.hpp"
#include "stitch_internal.hpp"

// Construction for m even, |S| >= 3, m/2 in both rims. The skeleton
// G' = B(m; {m/2}, S, {m/2}) splits into gcd(m/2, S) components that a
// rim type links cyclically; hamilton paths between a vertex and its
// antipode are chained through those links.

namespace bicyc {
namespace {

using detail::CycleBuilder;
using detail::scale_indices;
using detail::shift_vertex;

std::vector<Vertex> oracle_path(const BicirculantParams& g, Vertex from,
                                Vertex to, const SearchBudget& budget) {
  auto res = find_path_between(g, from, to, budget);
  if (res.status == SearchStatus::BudgetExceeded)
    fail(Errc::OracleFailed, "path search budget exceeded");
  if (!res.found())
    fail(Errc::OracleFailed, "no hamilton path " + to_string(from) + " -> " +
                                 to_string(to) + " in the skeleton component");
  return *res.sequence;
}

// Zig-zag across `blocks` components of the skeleton linked by rim type x
// on side sd; block i contains the side-sd vertex of index i*x. Covers
// those blocks with a cycle using at least two type-x edges.
std::vector<Vertex> half_zigzag(const BicirculantParams& p,
                                const BicirculantParams& skeleton, Side sd,
                                int x, int blocks, int comp_mod,
                                const SearchBudget& budget,
                                ConstructionTrace& trace) {
  const int m = p.m();
  const int half = m / 2;
  const int last = blocks - 1;
  auto W = [&](long long i) { return Vertex{sd, mod_norm(i * x, m)}; };
  auto Whalf = [&](long long i) {
    return Vertex{sd, mod_norm(half + i * x, m)};
  };

  CycleBuilder builder(m);
  auto emit_path = [&](const std::vector<Vertex>& path, int off) {
    for (size_t t = 0; t + 1 < path.size(); ++t)
      builder.add_edge(shift_vertex(path[t], off, m),
                       shift_vertex(path[t + 1], off, m));
  };

  const auto base = oracle_path(skeleton, W(0), Whalf(0), budget);
  const Vertex wrap = W(-1);  // the neighbor of W(0) in the last block
  const bool collision =
      (last % 2 == 0) ? (wrap == W(last)) : (wrap == Whalf(last));

  int replaced_upto = collision ? last - 1 : last;
  for (int i = 0; i < replaced_upto; ++i) emit_path(base, i * x);

  if (!collision) {
    const Vertex from = (last % 2 == 0) ? W(last) : Whalf(last);
    emit_path(oracle_path(skeleton, shift_vertex(from, -last * x, m),
                          shift_vertex(wrap, -last * x, m), budget),
              last * x);
  } else {
    // the wrap vertex collides with the standard start: reроute the last
    // two blocks through a spare vertex
    int spare = -1;
    for (int j = comp_mod; j < m; j += comp_mod) {
      if (j != half) {
        spare = j;
        break;
      }
    }
    if (spare < 0)
      fail(Errc::PreconditionViolated,
           "skeleton component too small for the wrap relabeling");
    trace.note("wrap collision at " + to_string(wrap) +
               "; spare vertex index " + std::to_string(spare));
    const Vertex vs = Vertex{sd, spare};
    if (last % 2 == 0) {
      emit_path(oracle_path(skeleton, vs, Whalf(0), budget), (last - 1) * x);
    } else {
      emit_path(oracle_path(skeleton, W(0), vs, budget), (last - 1) * x);
    }
    emit_path(oracle_path(skeleton, shift_vertex(wrap, -last * x, m),
                          shift_vertex(vs, 0, m), budget),
              last * x);
    builder.add_edge(shift_vertex(vs, (last - 1) * x, m),
                     shift_vertex(vs, last * x, m));
  }

  for (int i = 0; i + 1 < blocks; ++i) {
    if (collision && i == last - 1) continue;  // replaced by the spare join
    if (i % 2 == 0)
      builder.add_edge(Whalf(i), Whalf(i + 1));
    else
      builder.add_edge(W(i), W(i + 1));
  }
  builder.add_edge(W(0), wrap);

  const int comp_order = 2 * m / gcd_all(skeleton);
  return builder.extract(static_cast<size_t>(blocks) * comp_order);
}

std::optional<std::vector<Vertex>> spoke_path_any(
    const BicirculantParams& quotient, const SearchBudget& budget) {
  // hamilton path with free endpoints: cycle minus an edge, else scan
  auto cyc = find_cycle_exact(quotient, {}, budget);
  if (cyc.found()) return cyc.sequence;
  for (int id = 1; id < quotient.vertex_count(); ++id) {
    Vertex y = quotient.vertex_of(id);
    auto res = find_path_between(quotient, outer_vertex(0), y, budget);
    if (res.found()) return res.sequence;
    if (res.status == SearchStatus::BudgetExceeded)
      fail(Errc::OracleFailed, "path search budget exceeded");
  }
  return std::nullopt;
}

}  // namespace

StitchResult half_type_construct(const BicirculantParams& p,
                                 const SearchBudget& budget) {
  const int m = p.m();
  if (m % 2 != 0 || m < 4) fail(Errc::HypothesisUnmet, "m must be even, >= 4");
  if (p.s() < 3) fail(Errc::HypothesisUnmet, "need |S| >= 3");
  const int half = m / 2;
  if (!p.has_outer(half) || !p.has_inner(half))
    fail(Errc::HypothesisUnmet, "type m/2 must be present in both rims");
  if (!is_connected(p)) fail(Errc::HypothesisUnmet, "graph is disconnected");

  ConstructionTrace trace;
  StitchResult out;
  const auto& spokes = p.spoke_types();
  const int g1 = gcd_all(m, {std::span<const int>(spokes)});
  int g2 = half;
  for (int c : spokes) g2 = std::gcd(g2, c);

  if (g2 == 1) {
    trace.tag = "half-type-lift";
    if (g1 == 1) {
      // connected spoke subgraph spans the graph
      auto haar = BicirculantParams::make_relaxed(m, {}, spokes, {});
      auto res = find_cycle_exact(haar, {}, budget);
      if (res.status == SearchStatus::BudgetExceeded)
        fail(Errc::OracleFailed, "budget exceeded on the spoke subgraph");
      if (!res.found())
        fail(Errc::OracleFailed, "spoke subgraph has no hamilton cycle");
      trace.note("connected spoke subgraph; oracle cycle spans the graph");
      out.certificate = verify_certificate(p, *res.sequence);
      out.trace = std::move(trace);
      return out;
    }
    // two spoke components; lift a hamilton path of one of them
    std::vector<int> s_over;
    for (int c : spokes) s_over.push_back(c / g1);
    auto quotient =
        BicirculantParams::make_relaxed(m / g1, {}, std::move(s_over), {});
    auto path_q = spoke_path_any(quotient, budget);
    if (!path_q)
      fail(Errc::OracleFailed, "spoke component has no hamilton path");
    auto skeleton = BicirculantParams::make_relaxed(m, {half}, spokes, {half});
    auto cert = k2_lift(scale_indices(*path_q, g1), skeleton);
    trace.note("two spoke components; hamilton path lifted across type m/2");
    out.certificate = verify_certificate(p, cert.vertices);
    out.trace = std::move(trace);
    return out;
  }

  auto skeleton = BicirculantParams::make_relaxed(m, {half}, spokes, {half});

  // a rim type coprime to gcd(m/2, S) links all skeleton components
  auto coprime_pick = [&](const std::vector<int>& rim) {
    for (int t : rim)
      if (t != half && std::gcd(t, g2) == 1) return t;
    return -1;
  };
  int a = coprime_pick(p.outer_types());
  Side sd = Side::Outer;
  if (a < 0) {
    a = coprime_pick(p.inner_types());
    sd = Side::Inner;
  }
  if (a >= 0) {
    trace.tag = "half-type-case1";
    trace.note("linking type " + std::to_string(a) +
               (sd == Side::Outer ? " (outer)" : " (inner)") + " over " +
               std::to_string(g2) + " skeleton components");
    auto cycle = half_zigzag(p, skeleton, sd, a, g2, g2, budget, trace);
    out.certificate = verify_certificate(p, cycle);
    out.trace = std::move(trace);
    return out;
  }

  // no coprime type: pick one that still merges some components, build a
  // cycle of its block, then fold the remaining rim pairs back in
  auto strict_pick = [&](const std::vector<int>& rim) {
    int best = -1;
    for (int t : rim)
      if (t != half && std::gcd(t, g2) < g2 && (best < 0 || t < best))
        best = t;
    return best;
  };
  int x = strict_pick(p.outer_types());
  Side xs = Side::Outer;
  if (x < 0) {
    x = strict_pick(p.inner_types());
    xs = Side::Inner;
  }
  if (x < 0)
    fail(Errc::HypothesisUnmet,
         "every rim type is absorbed by the skeleton components");

  trace.tag = "half-type-case2";
  const int e = std::gcd(g2, x);
  const int q_blocks = g2 / e;
  trace.note("merging type " + std::to_string(x) + " spans " +
             std::to_string(q_blocks) + " of " + std::to_string(g2) +
             " skeleton components");
  auto cycle = half_zigzag(p, skeleton, xs, x, q_blocks, g2, budget, trace);

  // fold the other side's first non-half type into the block
  const auto& other_rim =
      xs == Side::Outer ? p.inner_types() : p.outer_types();
  int b = -1;
  for (int t : other_rim)
    if (t != half) {
      b = t;
      break;
    }
  if (b < 0) fail(Errc::HypothesisUnmet, "no partner rim type available");
  const int e1 = std::gcd(e, b);
  cycle = detail::zigzag_join(
      p, cycle, b, e / e1 - 1,
      xs == Side::Outer ? Side::Inner : Side::Outer);
  trace.note("partner type " + std::to_string(b) + " folds " +
             std::to_string(e / e1) + " blocks");

  // remaining rim pairs, quotient-scaled removal steps
  std::vector<int> rest_a, rest_b;
  auto reps_except = [&](const std::vector<int>& rim, int skip) {
    std::vector<int> reps;
    for (int t : rim)
      if (t != half && t != skip && t != mod_norm(-skip, m) && t <= m - t)
        reps.push_back(t);
    return reps;
  };
  rest_a = reps_except(xs == Side::Outer ? p.outer_types() : p.inner_types(), x);
  rest_b = reps_except(other_rim, b);
  if (rest_a.size() != rest_b.size())
    fail(Errc::HypothesisUnmet, "rim pair counts differ");

  std::vector<int> cur_R{mod_norm(x, m), mod_norm(-x, m), half};
  std::vector<int> cur_T{mod_norm(b, m), mod_norm(-b, m), half};
  if (xs == Side::Inner) std::swap(cur_R, cur_T);
  for (size_t i = 0; i < rest_a.size(); ++i) {
    int na = rest_a[i], nb = rest_b[i];
    if (xs == Side::Inner) std::swap(na, nb);
    cur_R.insert(cur_R.end(), {na, mod_norm(-na, m)});
    cur_T.insert(cur_T.end(), {nb, mod_norm(-nb, m)});
    auto level = BicirculantParams::make_relaxed(m, cur_R, spokes, cur_T);
    const int delta = gcd_all(level);
    auto divide = [delta](std::vector<int> v) {
      for (int& t : v) t /= delta;
      return v;
    };
    auto quotient = BicirculantParams::make_relaxed(
        m / delta, divide(cur_R), divide(spokes), divide(cur_T));
    std::vector<Vertex> down;
    down.reserve(cycle.size());
    for (const Vertex& v : cycle)
      down.push_back(Vertex{v.side, v.index / delta});
    auto res = stitch_removal(quotient, na / delta, nb / delta, {{0, down}});
    cycle = scale_indices(res.certificate.vertices, delta);
    trace.note("folded pair (" + std::to_string(na) + ", " +
               std::to_string(nb) + ")" + " at scale " + std::to_string(delta));
  }

  out.certificate = verify_certificate(p, cycle);
  out.trace = std::move(trace);
  return out;
}

}  // namespace bicyc
