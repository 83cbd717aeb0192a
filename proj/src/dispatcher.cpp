#include "bicyc/dispatcher.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace bicyc {
namespace {

Outcome hamiltonian_outcome(const BicirculantParams& p, CycleCertificate cert,
                            std::string method,
                            std::optional<ConstructionTrace> trace = {}) {
  Outcome out;
  out.verdict = Verdict::Hamiltonian;
  out.certificate = std::move(cert);
  out.method = std::move(method);
  out.trace = std::move(trace);
  (void)p;
  return out;
}

Outcome non_ham(NonHamiltonianReason reason, std::string method) {
  Outcome out;
  out.verdict = Verdict::NonHamiltonian;
  out.reason = reason;
  out.method = std::move(method);
  return out;
}

// exact oracle step shared by the cascade tail
std::optional<Outcome> try_exact(const BicirculantParams& p,
                                 const SearchBudget& budget) {
  auto res = find_cycle_exact(p, {}, budget);
  if (res.found())
    return hamiltonian_outcome(p, verify_certificate(p, *res.sequence),
                               "oracle-exact");
  if (res.exhausted()) return non_ham(NonHamiltonianReason::ExhaustiveSearch,
                                      "oracle-exact");
  return std::nullopt;
}

}  // namespace

Outcome classify(const BicirculantParams& p, const ClassifyOptions& opts) {
  const int m = p.m();
  const SearchBudget& budget = opts.budget;

  // 1: components are classified separately
  if (!is_connected(p)) {
    Outcome out;
    out.verdict = Verdict::Disconnected;
    out.decomposition = decompose(p);
    out.method = "gcd";
    return out;
  }

  // 2: the two known exception families
  if (m == 1) return non_ham(NonHamiltonianReason::K2, "exception");
  if (is_canonical_alspach_gp(p))
    return non_ham(NonHamiltonianReason::AlspachGP, "exception");

  // 3: tiny rings go straight to the oracle
  if (m <= 5) {
    if (auto out = try_exact(p, budget)) return *out;
    Outcome out;
    out.note = "budget exhausted on a tiny ring";
    return out;
  }

  if (opts.prefer_oracle) {
    if (auto out = try_exact(p, budget)) return *out;
  }

  // 4: connected spoke subgraph spans the graph
  const int g = gcd_all(m, {std::span<const int>(p.spoke_types())});
  if (g == 1 && p.s() >= 2) {
    auto haar = p.remove_types(p.outer_types(), p.inner_types());
    auto res = find_cycle_exact(haar, {}, budget);
    if (res.found())
      return hamiltonian_outcome(p, verify_certificate(p, *res.sequence),
                                 "haar-spanning");
  }

  // 5: single spoke
  if (p.s() == 1) {
    auto sub = s1_classify_construct(p, budget);
    switch (sub.kind) {
      case S1Outcome::Kind::Cycle:
        return hamiltonian_outcome(p, sub.result->certificate, "single-spoke",
                                   sub.result->trace);
      case S1Outcome::Kind::AlspachException:
        return non_ham(NonHamiltonianReason::AlspachGP, "exception");
      case S1Outcome::Kind::ProvenNonHamiltonian:
        return non_ham(NonHamiltonianReason::ExhaustiveSearch, "single-spoke");
      default:
        break;  // fall through to the remaining strategies
    }
  }

  // 6: half types on both rims with at least three spokes
  if (m % 2 == 0 && p.s() >= 3 && p.has_outer(m / 2) && p.has_inner(m / 2)) {
    try {
      auto r = half_type_construct(p, budget);
      return hamiltonian_outcome(p, r.certificate, "half-type", r.trace);
    } catch (const Error& e) {
      if (e.code() != Errc::HypothesisUnmet && e.code() != Errc::OracleFailed)
        throw;
    }
  }

  // 7: pipeline over the spoke components
  if (p.s() >= 2 && g > 1 && p.regular()) {
    try {
      auto r = pipeline_combination(p, budget);
      return hamiltonian_outcome(p, r.certificate, "pipeline", r.trace);
    } catch (const Error& e) {
      if (e.code() != Errc::HypothesisUnmet && e.code() != Errc::OracleFailed)
        throw;
    }
  }

  // 8: two spokes with all rim types coprime to gcd(m,S): search a
  // spanning four-valent sub-bicirculant
  if (p.s() == 2 && g > 1) {
    int a = -1, b = -1;
    for (int t : p.outer_types())
      if ((m % 2 != 0 || t != m / 2) && std::gcd(t, g) == 1) { a = t; break; }
    for (int t : p.inner_types())
      if ((m % 2 != 0 || t != m / 2) && std::gcd(t, g) == 1) { b = t; break; }
    if (a >= 0 && b >= 0) {
      auto sub = BicirculantParams::make_relaxed(
          m, {a, mod_norm(-a, m)}, p.spoke_types(), {b, mod_norm(-b, m)});
      if (is_connected(sub)) {
        auto res = find_cycle_exact(sub, {}, budget);
        if (res.found())
          return hamiltonian_outcome(p, verify_certificate(p, *res.sequence),
                                     "rose-window-subgraph");
      }
    }
  }

  // 9: exact search
  if (!opts.prefer_oracle) {
    if (auto out = try_exact(p, budget)) return *out;
  }

  // 10: heuristic
  if (auto cycle = find_cycle_heuristic(p, budget))
    return hamiltonian_outcome(p, verify_certificate(p, *cycle),
                               "oracle-heuristic");

  Outcome out;
  out.note = "budget exhausted";
  return out;
}

Theorem13Witness theorem13_applicable(const BicirculantParams& p) {
  Theorem13Witness w;
  w.applicable = prime_power_factor_count(p.m()) <= 3;
  const int g = gcd_all(p.m(), {std::span<const int>(p.spoke_types())});
  if (g == 1) {
    w.haar_connected = true;
    return w;
  }
  const auto& S = p.spoke_types();
  for (size_t i = 0; i < S.size(); ++i) {
    for (size_t j = 0; j < S.size(); ++j) {
      if (i == j) continue;
      const int c = mod_norm(S[i] - S[j], p.m());
      std::vector<int> two{0, c};
      const int gg =
          gcd_all(p.m(), {std::span<const int>(p.outer_types()),
                          std::span<const int>(p.inner_types()),
                          std::span<const int>(two)});
      if (gg == 1) {
        w.spoke_i = S[i];
        w.spoke_j = S[j];
        w.difference = c;
        return w;
      }
    }
  }
  return w;
}

namespace {

// canonical spoke set under shift (any element to 0) and global negation
std::vector<int> canonical_spokes(std::vector<int> s, int m) {
  std::sort(s.begin(), s.end());
  std::vector<int> best;
  for (int sign : {1, -1}) {
    for (int c : s) {
      std::vector<int> cand;
      cand.reserve(s.size());
      for (int x : s) cand.push_back(mod_norm(sign * (x - c), m));
      std::sort(cand.begin(), cand.end());
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

void enumerate_symmetric_sets(int m, int size, int min_rep,
                              std::vector<int>& reps,
                              std::vector<std::vector<int>>& out) {
  if (size == 0) {
    std::vector<int> full;
    for (int r : reps) {
      full.push_back(r);
      if (r != m - r) full.push_back(m - r);
    }
    std::sort(full.begin(), full.end());
    out.push_back(std::move(full));
    return;
  }
  for (int r = min_rep; r <= m / 2; ++r) {
    const int weight = (2 * r == m) ? 1 : 2;
    if (weight > size) continue;
    reps.push_back(r);
    enumerate_symmetric_sets(m, size - weight, r + 1, reps, out);
    reps.pop_back();
  }
}

}  // namespace

std::vector<BicirculantParams> enumerate_universe(int m_max, int d_max) {
  std::vector<BicirculantParams> out;
  for (int m = 1; m <= m_max; ++m) {
    // rims: symmetric sets grouped by size
    std::map<int, std::vector<std::vector<int>>> rims_by_size;
    rims_by_size[0] = {{}};
    for (int size = 1; size < m && size <= d_max - 1; ++size) {
      std::vector<std::vector<int>> sets;
      std::vector<int> reps;
      enumerate_symmetric_sets(m, size, 1, reps, sets);
      if (!sets.empty()) rims_by_size[size] = std::move(sets);
    }
    // spokes: subsets containing 0, canonical under shift/negation
    std::vector<std::vector<int>> spoke_sets;
    const int s_cap = std::min(d_max, m);
    std::vector<int> chosen{0};
    auto rec = [&](auto&& self, int next, int left) -> void {
      {
        auto canon = canonical_spokes(chosen, m);
        if (canon == chosen) spoke_sets.push_back(chosen);
      }
      if (left == 0) return;
      for (int c = next; c < m; ++c) {
        chosen.push_back(c);
        self(self, c + 1, left - 1);
        chosen.pop_back();
      }
    };
    rec(rec, 1, s_cap - 1);

    for (const auto& spokes : spoke_sets) {
      const int s = static_cast<int>(spokes.size());
      for (const auto& [r, rsets] : rims_by_size) {
        if (r + s > d_max || r + s < 1) continue;
        for (const auto& R : rsets) {
          for (const auto& T : rsets) {
            out.push_back(BicirculantParams::make(m, R, spokes, T));
          }
        }
      }
    }
  }
  return out;
}

namespace {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Hamiltonian: return "hamiltonian";
    case Verdict::NonHamiltonian: return "non-hamiltonian";
    case Verdict::Disconnected: return "disconnected";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const char* reason_name(NonHamiltonianReason r) {
  switch (r) {
    case NonHamiltonianReason::K2: return "K2";
    case NonHamiltonianReason::AlspachGP: return "AlspachGP";
    case NonHamiltonianReason::ExhaustiveSearch: return "ExhaustiveSearch";
  }
  return "?";
}

}  // namespace

SweepReport sweep(const SweepOptions& opts) {
  auto universe = enumerate_universe(opts.m_max, opts.d_max);
  SweepReport report;
  report.universe_size = universe.size();

  struct Row {
    std::string verdict;
    std::string params;
    bool exception{false};
    bool unknown{false};
    bool agreement_checked{false};
    bool agreement_failed{false};
  };
  std::vector<Row> rows(universe.size());

  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      const size_t idx = cursor.fetch_add(1);
      if (idx >= universe.size()) return;
      const auto& p = universe[idx];
      ClassifyOptions copts;
      copts.budget = opts.budget;
      copts.prefer_oracle = opts.prefer_oracle;
      Outcome o = classify(p, copts);
      Row& row = rows[idx];
      row.params = p.render();
      row.verdict = verdict_name(o.verdict);
      if (o.verdict == Verdict::NonHamiltonian) {
        row.verdict = std::string("non-hamiltonian/") + reason_name(*o.reason);
        row.exception = true;
      }
      if (o.verdict == Verdict::Unknown) row.unknown = true;
      // construction verdicts are cross-checked against plain search
      if (o.verdict == Verdict::Hamiltonian && p.m() <= opts.agreement_m_max &&
          o.method != "oracle-exact") {
        auto res = find_cycle_exact(p, {}, opts.budget);
        if (res.found() || res.exhausted()) {
          row.agreement_checked = true;
          row.agreement_failed = !res.found();
        }
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const Row& row : rows) {
    ++report.verdict_histogram[row.verdict];
    if (row.exception) report.exceptions.push_back(row.params);
    if (row.unknown) report.unknown.push_back(row.params);
    if (row.agreement_checked) ++report.agreement_checked;
    if (row.agreement_failed) report.agreement_failures.push_back(row.params);
  }
  std::sort(report.exceptions.begin(), report.exceptions.end());
  std::sort(report.unknown.begin(), report.unknown.end());
  std::sort(report.agreement_failures.begin(), report.agreement_failures.end());
  return report;
}

std::string Outcome::to_json(const BicirculantParams& p) const {
  nlohmann::json j;
  j["params"] = p.render();
  j["verdict"] = verdict_name(verdict);
  j["method"] = method;
  if (reason) j["reason"] = reason_name(*reason);
  if (certificate) {
    j["certificate"] =
        nlohmann::json::parse(certificate_to_json(p, *certificate));
  }
  if (trace) {
    j["trace"] = {{"tag", trace->tag}, {"log", trace->log}};
  }
  if (decomposition) {
    j["delta"] = decomposition->delta;
    j["quotient"] = decomposition->quotient.render();
  }
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

std::string SweepReport::to_json() const {
  nlohmann::json j;
  j["universe_size"] = universe_size;
  j["verdict_histogram"] = verdict_histogram;
  j["exceptions"] = exceptions;
  j["unknown"] = unknown;
  j["agreement_failures"] = agreement_failures;
  j["agreement_checked"] = agreement_checked;
  return j.dump(2);
}

}  // namespace bicyc
