#include "bicyc/structure.hpp"

#include <numeric>

namespace bicyc {

int gcd_all(int m, std::initializer_list<std::span<const int>> sets) {
  int g = m;
  for (const auto& set : sets)
    for (int x : set) g = std::gcd(g, x);
  return g;
}

bool is_connected(const BicirculantParams& p) { return gcd_all(p) == 1; }

Decomposition decompose(const BicirculantParams& p) {
  const int delta = gcd_all(p);
  const int m = p.m();
  std::vector<int> comp(2 * m);
  for (int i = 0; i < m; ++i) {
    comp[i] = i % delta;
    comp[m + i] = i % delta;
  }
  auto divide = [delta](const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size());
    for (int t : in) out.push_back(t / delta);
    return out;
  };
  auto quotient = BicirculantParams::make_relaxed(
      m / delta, divide(p.outer_types()), divide(p.spoke_types()),
      divide(p.inner_types()));
  return Decomposition{delta, std::move(comp), std::move(quotient)};
}

GridShape grid_shape(const BicirculantParams& p, int a, int b) {
  a = mod_norm(a, p.m());
  b = mod_norm(b, p.m());
  if (!p.has_outer(a))
    fail(Errc::TypeNotPresent, "outer " + std::to_string(a));
  if (!p.has_inner(b))
    fail(Errc::TypeNotPresent, "inner " + std::to_string(b));
  if (p.m() % 2 == 0 && (a == p.m() / 2 || b == p.m() / 2))
    fail(Errc::HalfTypeForbidden, "type m/2 not allowed here");
  const int gs = gcd_all(p.m(), {std::span<const int>(p.spoke_types())});
  const int gsb = std::gcd(gs, b);
  return GridShape{a, b, gsb - 1, gs / gsb - 1};
}

GridShape grid_shape_general(const BicirculantParams& p, int a, int b) {
  a = mod_norm(a, p.m());
  b = mod_norm(b, p.m());
  if (!p.has_outer(a))
    fail(Errc::TypeNotPresent, "outer " + std::to_string(a));
  if (!p.has_inner(b))
    fail(Errc::TypeNotPresent, "inner " + std::to_string(b));
  if (p.m() % 2 == 0 && (a == p.m() / 2 || b == p.m() / 2))
    fail(Errc::HalfTypeForbidden, "type m/2 not allowed here");
  auto h = p.remove_types({a, -a}, {b, -b});
  auto k = p.remove_types({a, -a}, {});
  const int n_h = gcd_all(h);   // components after dropping both types
  const int n_k = gcd_all(k);   // components after dropping only the outer
  return GridShape{a, b, n_k - 1, n_h / n_k - 1};
}

int prime_power_factor_count(int m) {
  int count = 0;
  for (int d = 2; static_cast<long long>(d) * d <= m; ++d) {
    if (m % d == 0) {
      ++count;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) ++count;
  return count;
}

}  // namespace bicyc
