#include <algorithm>
#include <numeric>

#include "bicyc/constructions.hpp"
#include "stitch_internal.hpp"

namespace bicyc {
namespace {

using detail::scale_indices;

std::vector<int> divide_all(std::vector<int> v, int d) {
  for (int& t : v) t /= d;
  return v;
}

std::vector<Vertex> divide_indices(const std::vector<Vertex>& seq, int d) {
  std::vector<Vertex> out;
  out.reserve(seq.size());
  for (const Vertex& v : seq) out.push_back(Vertex{v.side, v.index / d});
  return out;
}

// One fold step in true coordinates: add rim pair (a, b) to the current
// level, stitch the previous component cycle through the level's quotient.
std::vector<Vertex> fold_pair(int m, const std::vector<int>& R,
                              const std::vector<int>& S,
                              const std::vector<int>& T, int a, int b,
                              const std::vector<Vertex>& cycle,
                              ConstructionTrace& trace) {
  auto level = BicirculantParams::make_relaxed(m, R, S, T);
  const int delta = gcd_all(level);
  auto quotient = BicirculantParams::make_relaxed(
      m / delta, divide_all(R, delta), divide_all(S, delta),
      divide_all(T, delta));
  auto res = stitch_removal(quotient, a / delta, b / delta,
                            {{0, divide_indices(cycle, delta)}});
  for (auto& line : res.trace.log) trace.note(line);
  trace.note("folded pair (" + std::to_string(a) + ", " + std::to_string(b) +
             ") [" + res.trace.tag + "]");
  return scale_indices(res.certificate.vertices, delta);
}

}  // namespace

StitchResult pipeline_combination(const BicirculantParams& p,
                                  const SearchBudget& budget) {
  const int m = p.m();
  if (!is_connected(p)) fail(Errc::HypothesisUnmet, "graph is disconnected");
  if (p.s() < 2) fail(Errc::HypothesisUnmet, "need |S| >= 2");
  if (m <= 5) fail(Errc::HypothesisUnmet, "m <= 5 is handled elsewhere");
  if (!p.regular()) fail(Errc::HypothesisUnmet, "rims must have equal sizes");
  const int g = gcd_all(m, {std::span<const int>(p.spoke_types())});
  if (g <= 1) fail(Errc::HypothesisUnmet, "spoke subgraph is connected");

  const int half = m % 2 == 0 ? m / 2 : -1;
  const bool has_half = half > 0 && p.has_outer(half);

  // canonical reps per side, non-coprime to gcd(m,S) first
  auto side_reps = [&](const std::vector<int>& rim) {
    std::vector<int> reps;
    for (int t : rim)
      if (t != half && t <= m - t) reps.push_back(t);
    std::stable_sort(reps.begin(), reps.end(), [&](int x, int y) {
      const bool xc = std::gcd(x, g) > 1, yc = std::gcd(y, g) > 1;
      if (xc != yc) return xc;
      return x < y;
    });
    return reps;
  };
  auto ra = side_reps(p.outer_types());
  auto rt = side_reps(p.inner_types());
  if (ra.size() != rt.size())
    fail(Errc::HypothesisUnmet, "rim pair counts differ");
  const bool carrier = (!ra.empty() && std::gcd(ra[0], g) > 1) ||
                       (!rt.empty() && std::gcd(rt[0], g) > 1);
  if (!carrier)
    fail(Errc::HypothesisUnmet,
         "every rim type other than m/2 is coprime to gcd(m,S)");

  ConstructionTrace trace;
  trace.tag = "pipeline";
  {
    std::string order = "fold order:";
    for (size_t i = 0; i < ra.size(); ++i)
      order += " (" + std::to_string(ra[i]) + "," + std::to_string(rt[i]) + ")";
    if (has_half) order += " (m/2,m/2)";
    trace.note(order);
    std::string removal = "removal order:";
    if (has_half) removal += " (m/2,m/2)";
    for (size_t i = ra.size(); i-- > 0;)
      removal +=
          " (" + std::to_string(ra[i]) + "," + std::to_string(rt[i]) + ")";
    trace.note(removal);
  }

  auto base = detail::spoke_component_cycle(p, budget);
  if (!base)
    fail(Errc::HypothesisUnmet, "spoke components are not hamiltonian");

  // first level: one rim pair over the spoke subgraph
  const int a1 = ra[0], b1 = rt[0];
  std::vector<int> cur_R{a1, mod_norm(-a1, m)};
  std::vector<int> cur_T{b1, mod_norm(-b1, m)};
  auto level1 = BicirculantParams::make_relaxed(m, cur_R, p.spoke_types(),
                                                cur_T);
  const int d1 = gcd_all(level1);
  auto q1 = BicirculantParams::make_relaxed(
      m / d1, divide_all(cur_R, d1), divide_all(p.spoke_types(), d1),
      divide_all(cur_T, d1));
  std::vector<Vertex> cycle;
  try {
    auto r1 = stitch_haar(q1, divide_indices(*base, d1));
    for (auto& line : r1.trace.log) trace.note(line);
    trace.note("first level (" + std::to_string(a1) + ", " +
               std::to_string(b1) + ") [" + r1.trace.tag + "]");
    cycle = scale_indices(r1.certificate.vertices, d1);
  } catch (const Error& e) {
    if (e.code() != Errc::PreconditionViolated) throw;
    // the first-level components are not grid-shaped; take an oracle
    // cycle with enough outer edges instead
    CycleConstraints cons;
    cons.min_outer = 2;
    auto res = find_cycle_exact(q1, cons, budget);
    if (res.status == SearchStatus::BudgetExceeded)
      fail(Errc::OracleFailed, "budget exceeded on the first level");
    if (!res.found())
      fail(Errc::OracleFailed,
           "first level has no hamilton cycle with two outer edges");
    trace.note("first level (" + std::to_string(a1) + ", " +
               std::to_string(b1) + ") via oracle (" + e.what() + ")");
    cycle = scale_indices(*res.sequence, d1);
  }

  for (size_t i = 1; i < ra.size(); ++i) {
    cur_R.insert(cur_R.end(), {ra[i], mod_norm(-ra[i], m)});
    cur_T.insert(cur_T.end(), {rt[i], mod_norm(-rt[i], m)});
    cycle = fold_pair(m, cur_R, p.spoke_types(), cur_T, ra[i], rt[i], cycle,
                      trace);
  }

  if (has_half) {
    auto level = BicirculantParams::make_relaxed(m, cur_R, p.spoke_types(),
                                                 cur_T);
    if (gcd_all(level) == 2) {
      auto cert = k2_lift(cycle, p);
      trace.note("doubling lift across the type-m/2 pair");
      cycle = cert.vertices;
    } else {
      trace.note("type-m/2 pair is redundant: the level is already spanning");
    }
  }

  StitchResult out;
  out.certificate = verify_certificate(p, cycle);
  out.trace = std::move(trace);
  return out;
}

bool is_canonical_alspach_gp(const BicirculantParams& p) {
  if (p.m() < 5 || p.m() % 6 != 5) return false;
  if (p.s() != 1 || p.spoke_types()[0] != 0) return false;
  const std::vector<int> one{1, p.m() - 1};
  const std::vector<int> two{2, p.m() - 2};
  return (p.outer_types() == one && p.inner_types() == two) ||
         (p.outer_types() == two && p.inner_types() == one);
}

namespace {

S1Outcome s1_cycle(StitchResult result) {
  S1Outcome out;
  out.kind = S1Outcome::Kind::Cycle;
  out.result = std::move(result);
  return out;
}

S1Outcome s1_from_oracle(const BicirculantParams& p, const SearchBudget& budget,
                         ConstructionTrace trace) {
  auto res = find_cycle_exact(p, {}, budget);
  if (res.found()) {
    trace.note("oracle cycle on the full graph");
    StitchResult r;
    r.certificate = verify_certificate(p, *res.sequence);
    r.trace = std::move(trace);
    return s1_cycle(std::move(r));
  }
  S1Outcome out;
  if (res.exhausted()) {
    out.kind = S1Outcome::Kind::ProvenNonHamiltonian;
    out.detail = "exhaustive search found no hamilton cycle";
  } else {
    out.kind = S1Outcome::Kind::Budget;
    out.detail = "search budget exceeded";
  }
  return out;
}

// hamilton path of the quotient component with free endpoints
std::optional<std::vector<Vertex>> any_ham_path(const BicirculantParams& q,
                                                const SearchBudget& budget) {
  auto cyc = find_cycle_exact(q, {}, budget);
  if (cyc.found()) return cyc.sequence;
  for (int id = 1; id < q.vertex_count(); ++id) {
    auto res = find_path_between(q, outer_vertex(0), q.vertex_of(id), budget);
    if (res.found()) return res.sequence;
  }
  return std::nullopt;
}

}  // namespace

S1Outcome s1_classify_construct(const BicirculantParams& p,
                                const SearchBudget& budget) {
  S1Outcome out;
  if (p.s() != 1 || p.spoke_types()[0] != 0) {
    out.detail = "spoke set must be {0}";
    return out;
  }
  if (!is_connected(p)) {
    out.detail = "graph is disconnected";
    return out;
  }
  if (p.m() == 1) {
    out.detail = "single-edge graph has no cycle";
    return out;
  }

  const int m = p.m();
  const int d = p.degree();
  ConstructionTrace trace;
  trace.tag = "single-spoke";

  if (d <= 3) {
    if (is_canonical_alspach_gp(p)) {
      out.kind = S1Outcome::Kind::AlspachException;
      out.detail = "canonical non-hamiltonian family member";
      return out;
    }
    trace.note("base case d <= 3");
    return s1_from_oracle(p, budget, std::move(trace));
  }

  if (d % 2 == 0) {
    // every vertex carries a type-m/2 rim edge; strip it and lift
    const int half = m / 2;
    auto h = p.remove_types({half}, {half});
    const int dh = gcd_all(h);
    if (dh == 1) {
      auto sub = s1_classify_construct(h, budget);
      if (sub.kind == S1Outcome::Kind::Cycle) {
        trace.note("type-m/2 pair stripped; spanning subgraph cycle reused");
        for (auto& line : sub.result->trace.log) trace.note(line);
        StitchResult r;
        r.certificate =
            verify_certificate(p, sub.result->certificate.vertices);
        r.trace = std::move(trace);
        return s1_cycle(std::move(r));
      }
      if (sub.kind == S1Outcome::Kind::Budget) return sub;
      return s1_from_oracle(p, budget, std::move(trace));
    }
    // two components; lift a hamilton path
    auto dec = decompose(h);
    auto path_q = any_ham_path(dec.quotient, budget);
    if (!path_q) return s1_from_oracle(p, budget, std::move(trace));
    auto cert = k2_lift(scale_indices(*path_q, dh), p);
    trace.note("type-m/2 pair stripped; hamilton path lifted");
    StitchResult r;
    r.certificate = verify_certificate(p, cert.vertices);
    r.trace = std::move(trace);
    return s1_cycle(std::move(r));
  }

  // odd degree >= 5: remove one rim pair and recurse on the components
  std::vector<int> a_reps, b_reps;
  for (int t : p.outer_types())
    if (t <= m - t) a_reps.push_back(t);
  for (int t : p.inner_types())
    if (t <= m - t) b_reps.push_back(t);

  bool budget_hit = false;
  std::optional<std::pair<int, int>> escape;
  for (int a : a_reps) {
    for (int b : b_reps) {
      auto h = p.remove_types({a, mod_norm(-a, m)}, {b, mod_norm(-b, m)});
      auto dec = decompose(h);
      auto sub = s1_classify_construct(dec.quotient, budget);
      if (sub.kind == S1Outcome::Kind::Cycle) {
        auto comp_cycle =
            scale_indices(sub.result->certificate.vertices, dec.delta);
        auto res = stitch_removal(p, a, b, {{0, comp_cycle}});
        trace.note("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                   ") removed; components rebuilt [" + res.trace.tag + "]");
        for (auto& line : sub.result->trace.log) trace.note(line);
        res.trace = std::move(trace);
        return s1_cycle(std::move(res));
      }
      if (sub.kind == S1Outcome::Kind::Budget) budget_hit = true;
      if ((sub.kind == S1Outcome::Kind::AlspachException ||
           sub.kind == S1Outcome::Kind::ProvenNonHamiltonian) &&
          !escape)
        escape = {a, b};
    }
  }

  if (escape) {
    const auto [a, b] = *escape;
    auto h = p.remove_types({a, mod_norm(-a, m)}, {b, mod_norm(-b, m)});
    const int nh = gcd_all(h);
    trace.note("components after removing (" + std::to_string(a) + ", " +
               std::to_string(b) + ") are non-hamiltonian; rerouting");
    if (nh == 1) {
      // connected residual: hamilton path between the ends of a removed
      // rim edge, closed by that edge
      auto res = find_path_between(h, outer_vertex(0), outer_vertex(a), budget);
      if (res.found()) {
        trace.note("hamilton path closed by an outer edge of the removed type");
        StitchResult r;
        r.certificate = verify_certificate(p, *res.sequence);
        r.trace = std::move(trace);
        return s1_cycle(std::move(r));
      }
    } else {
      // oracle cycle with two outer edges on the residual component of
      // u_0 (removing only the outer type), then the outer zig-zag
      auto k = p.remove_types({a, mod_norm(-a, m)}, {});
      const int nk = gcd_all(k);
      auto deck = decompose(k);
      CycleConstraints cons;
      cons.min_outer = 2;
      auto res = find_cycle_exact(deck.quotient, cons, budget);
      if (res.found()) {
        auto cycle = scale_indices(*res.sequence, nk);
        cycle = detail::zigzag_join(p, cycle, a, nk - 1, Side::Outer);
        trace.note("residual component cycle from the oracle; outer zig-zag");
        StitchResult r;
        r.certificate = verify_certificate(p, cycle);
        r.trace = std::move(trace);
        return s1_cycle(std::move(r));
      }
    }
  }

  if (budget_hit) {
    out.kind = S1Outcome::Kind::Budget;
    out.detail = "recursion ran out of budget";
    return out;
  }
  return s1_from_oracle(p, budget, std::move(trace));
}

}  // namespace bicyc
