#include <algorithm>

#include "bicyc/constructions.hpp"
#include "stitch_internal.hpp"

namespace bicyc {

using detail::count_side_edges;
using detail::shift_vertex;
using detail::zigzag_join;

// Folds the rim types ±a, ±b back into p: the supplied cycle of the
// u_0-component of H = p minus both types is zig-zagged along inner type b
// inside its K-component first (when K-components hold several
// H-components), then along outer type a across the K-components.
StitchResult stitch_removal(
    const BicirculantParams& p, int a, int b,
    const std::map<int, std::vector<Vertex>>& component_cycles) {
  const int m = p.m();
  a = mod_norm(a, m);
  b = mod_norm(b, m);
  if (!p.has_outer(a)) fail(Errc::TypeNotPresent, "outer " + std::to_string(a));
  if (!p.has_inner(b)) fail(Errc::TypeNotPresent, "inner " + std::to_string(b));
  if (m % 2 == 0 && (a == m / 2 || b == m / 2))
    fail(Errc::PreconditionViolated, "types must differ from m/2");
  if (!is_connected(p))
    fail(Errc::PreconditionViolated, "graph is disconnected");

  auto h = p.remove_types({a, -a}, {b, -b});
  auto it = component_cycles.find(0);
  if (it == component_cycles.end())
    fail(Errc::PreconditionViolated, "missing cycle for component 0");
  const std::vector<Vertex>& base = it->second;
  detail::check_component_cycle(h, base);
  const int n_h = gcd_all(h);
  if (mod_norm(base.front().index, n_h) != 0)
    fail(Errc::BaseCycleInvalid, "cycle must lie in the u_0 component");
  if (count_side_edges(base, Side::Outer) < 2)
    fail(Errc::TooFewOuterEdges, "component 0");

  ConstructionTrace trace;
  StitchResult out;
  if (n_h == 1) {
    trace.tag = "removal-trivial";
    trace.note("residual graph is connected; cycle reused as-is");
    out.certificate = verify_certificate(p, base);
    out.trace = std::move(trace);
    return out;
  }

  const int lam = gcd_all(p.remove_types({a, -a}, {})) - 1;
  const int mu = n_h / (lam + 1) - 1;
  std::vector<Vertex> cycle = base;
  if (mu > 0) {
    cycle = zigzag_join(p, cycle, b, mu, Side::Inner);
    trace.tag = "removal-case2";
    trace.note("inner zig-zag over " + std::to_string(mu + 1) +
               " components via type " + std::to_string(b));
  } else {
    trace.tag = "removal-case1";
  }
  if (lam > 0) {
    cycle = zigzag_join(p, cycle, a, lam, Side::Outer);
    trace.note("outer zig-zag over " + std::to_string(lam + 1) +
               " components via type " + std::to_string(a));
  }
  out.certificate = verify_certificate(p, cycle);
  if (count_side_edges(out.certificate.vertices, Side::Outer) < 2)
    fail(Errc::InternalStitchFailure, "emitted cycle lacks two outer edges");
  out.trace = std::move(trace);
  return out;
}

// Walk the path in one component of H = p minus the type-m/2 rims, cross
// to the shifted copy, walk it backwards, cross back. Exactly two type-m/2
// edges are used. For disconnected p the lift covers the p-component of
// the input (checked directly; the certificate then spans that component).
CycleCertificate k2_lift(const std::vector<Vertex>& path_or_cycle,
                         const BicirculantParams& p) {
  const int m = p.m();
  if (m % 2 != 0) fail(Errc::WrongShape, "m must be even");
  const int half = m / 2;
  if (!p.has_outer(half) || !p.has_inner(half))
    fail(Errc::WrongShape, "type m/2 must be present in both rims");

  auto h = p.remove_types({half}, {half});
  const int delta_h = gcd_all(h);
  const int delta_p = gcd_all(p);
  if (delta_h != 2 * delta_p)
    fail(Errc::WrongShape,
         "removing type m/2 must split each component in two");

  const std::vector<Vertex>& w = path_or_cycle;
  if (w.size() < 2) fail(Errc::PathInvalid, "path too short");
  detail::check_component_path(h, w);

  std::vector<Vertex> cycle = w;
  for (auto rit = w.rbegin(); rit != w.rend(); ++rit)
    cycle.push_back(shift_vertex(*rit, half, m));

  // direct verification; equals verify_certificate when p is connected
  const size_t size = cycle.size();
  if (size != static_cast<size_t>(2 * m / delta_p))
    fail(Errc::PathInvalid, "lift does not span the component");
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != size)
    fail(Errc::PathInvalid, "shifted copy overlaps the path");
  CycleCertificate cert;
  int half_edges = 0;
  for (size_t i = 0; i < size; ++i) {
    const Vertex& x = cycle[i];
    const Vertex& y = cycle[(i + 1) % size];
    if (!p.adjacent(x, y))
      fail(Errc::PathInvalid,
           "lifted step " + to_string(x) + " -- " + to_string(y));
    EdgeKind k = p.classify_edge(x, y);
    switch (k.cls) {
      case EdgeClass::Outer: ++cert.outer_count; break;
      case EdgeClass::Inner: ++cert.inner_count; break;
      case EdgeClass::Spoke: ++cert.spoke_count; break;
    }
    if (k.cls != EdgeClass::Spoke && k.type == half) ++half_edges;
  }
  if (half_edges != 2)
    fail(Errc::InternalStitchFailure,
         "lift must use exactly two type-m/2 edges");
  if (cert.outer_count != cert.inner_count)
    fail(Errc::InternalStitchFailure, "outer/inner count mismatch");
  cert.vertices = canonicalize_cycle(std::move(cycle));
  return cert;
}

}  // namespace bicyc
