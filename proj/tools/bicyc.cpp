#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bicyc/certificate.hpp"
#include "bicyc/constructions.hpp"
#include "bicyc/dispatcher.hpp"
#include "bicyc/export.hpp"
#include "bicyc/oracle.hpp"
#include "bicyc/parse.hpp"
#include "bicyc/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitClaim = 3;
constexpr int kExitBudget = 4;

bicyc::SearchBudget env_budget() {
  bicyc::SearchBudget b;
  if (const char* nodes = std::getenv("BICYC_BUDGET_NODES"))
    b.max_nodes = std::strtoull(nodes, nullptr, 10);
  if (const char* millis = std::getenv("BICYC_BUDGET_MILLIS"))
    b.max_millis = std::strtoll(millis, nullptr, 10);
  return b;
}

int semantic_exit(const bicyc::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return e.code() == bicyc::Errc::SyntaxError ? kExitUsage : kExitSemantic;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) bicyc::fail(bicyc::Errc::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) bicyc::fail(bicyc::Errc::IoError, "cannot write " + path);
  out << text;
}

int cmd_info(const std::string& params_text) {
  auto p = bicyc::parse_params(params_text);
  nlohmann::json j;
  j["params"] = p.render();
  j["m"] = p.m();
  j["r"] = p.r();
  j["s"] = p.s();
  j["d"] = p.degree();
  j["connected"] = bicyc::is_connected(p);
  auto dec = bicyc::decompose(p);
  j["delta"] = dec.delta;
  j["quotient"] = dec.quotient.render();
  nlohmann::json table = nlohmann::json::array();
  for (int a : p.outer_types()) {
    if (a > p.m() - a) continue;
    for (int b : p.inner_types()) {
      if (b > p.m() - b) continue;
      if (p.m() % 2 == 0 && (a == p.m() / 2 || b == p.m() / 2)) continue;
      auto gs = bicyc::grid_shape(p, a, b);
      auto gg = bicyc::grid_shape_general(p, a, b);
      table.push_back({{"a", a},
                       {"b", b},
                       {"lambda", gs.lambda},
                       {"mu", gs.mu},
                       {"lambda_general", gg.lambda},
                       {"mu_general", gg.mu}});
    }
  }
  j["grid_shapes"] = std::move(table);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int emit_found(const bicyc::BicirculantParams& p,
               const bicyc::CycleCertificate& cert,
               const bicyc::ConstructionTrace* trace,
               const std::string& emit_dot) {
  nlohmann::json j =
      nlohmann::json::parse(bicyc::certificate_to_json(p, cert));
  if (trace) {
    j["trace"] = {{"tag", trace->tag}, {"log", trace->log}};
    std::cerr << "construction: " << trace->to_string() << "\n";
  }
  std::cout << j.dump() << "\n";
  if (!emit_dot.empty())
    write_out(emit_dot,
              bicyc::export_graph(p, cert, bicyc::ExportFormat::Dot));
  return kExitOk;
}

int cmd_find(const std::string& params_text, const std::string& strategy,
             int min_outer, const bicyc::SearchBudget& budget,
             const std::string& emit_dot) {
  auto p = bicyc::parse_params(params_text);

  auto report = [&](const char* result, const char* detail) {
    nlohmann::json j;
    j["params"] = p.render();
    j["result"] = result;
    j["detail"] = detail;
    std::cout << j.dump() << "\n";
  };

  if (strategy == "exact" || strategy == "auto") {
    bicyc::CycleConstraints cons;
    cons.min_outer = min_outer;
    auto res = bicyc::find_cycle_exact(p, cons, budget);
    if (res.found())
      return emit_found(p, bicyc::verify_certificate(p, *res.sequence),
                        nullptr, emit_dot);
    if (res.exhausted()) {
      report("none", "exhaustive search completed; no hamilton cycle");
      return kExitClaim;
    }
    if (strategy == "exact") {
      report("unknown", "search budget exceeded");
      return kExitBudget;
    }
  }
  if (strategy == "heuristic" || strategy == "auto") {
    if (auto cycle = bicyc::find_cycle_heuristic(p, budget))
      return emit_found(p, bicyc::verify_certificate(p, *cycle), nullptr,
                        emit_dot);
    report("unknown", "heuristic budget exceeded");
    return kExitBudget;
  }
  if (strategy == "construct") {
    std::optional<bicyc::StitchResult> r;
    std::string failures;
    if (p.s() == 1) {
      auto s1 = bicyc::s1_classify_construct(p, budget);
      if (s1.kind == bicyc::S1Outcome::Kind::Cycle) r = std::move(s1.result);
      else failures = "single-spoke: " + s1.detail;
    } else {
      for (const char* name : {"half-type", "pipeline"}) {
        try {
          if (std::string(name) == "half-type")
            r = bicyc::half_type_construct(p, budget);
          else
            r = bicyc::pipeline_combination(p, budget);
          break;
        } catch (const bicyc::Error& e) {
          if (e.code() != bicyc::Errc::HypothesisUnmet &&
              e.code() != bicyc::Errc::OracleFailed)
            throw;
          failures += std::string(name) + ": " + e.what() + "; ";
        }
      }
    }
    if (r) return emit_found(p, r->certificate, &r->trace, emit_dot);
    report("inapplicable", failures.c_str());
    return kExitSemantic;
  }
  std::cerr << "error: unknown strategy " << strategy << "\n";
  return kExitUsage;
}

int cmd_classify(const std::string& params_text,
                 const bicyc::SearchBudget& budget, bool prefer_oracle) {
  auto p = bicyc::parse_params(params_text);
  bicyc::ClassifyOptions opts;
  opts.budget = budget;
  opts.prefer_oracle = prefer_oracle;
  auto outcome = bicyc::classify(p, opts);
  std::cout << outcome.to_json(p) << "\n";
  return outcome.verdict == bicyc::Verdict::Unknown ? kExitBudget : kExitOk;
}

int cmd_verify(const std::string& params_text, const std::string& cert_path) {
  auto p = bicyc::parse_params(params_text);
  std::string text;
  try {
    text = slurp(cert_path);
  } catch (const bicyc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  bicyc::ParsedCertificate parsed;
  try {
    parsed = bicyc::certificate_from_json(text);
    auto declared = bicyc::parse_params(parsed.params_text);
    if (!(declared == p))
      bicyc::fail(bicyc::Errc::CycleParamMismatch,
                  "certificate declares " + declared.render());
  } catch (const bicyc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  try {
    auto cert = bicyc::verify_certificate(p, parsed.cycle);
    nlohmann::json j;
    j["params"] = p.render();
    j["verified"] = true;
    j["counts"] = {{"outer", cert.outer_count},
                   {"inner", cert.inner_count},
                   {"spoke", cert.spoke_count}};
    std::cout << j.dump() << "\n";
    return kExitOk;
  } catch (const bicyc::Error& e) {
    nlohmann::json j;
    j["params"] = p.render();
    j["verified"] = false;
    j["reason"] = e.what();
    std::cout << j.dump() << "\n";
    return kExitClaim;
  }
}

int cmd_sweep(const bicyc::SweepOptions& opts, const std::string& out_path) {
  auto report = bicyc::sweep(opts);
  const std::string text = report.to_json() + "\n";
  write_out(out_path, text);
  if (!out_path.empty() && out_path != "-") {
    std::cerr << "universe " << report.universe_size << ", exceptions "
              << report.exceptions.size() << ", unknown "
              << report.unknown.size() << "\n";
  }
  return kExitOk;
}

int cmd_export(const std::string& params_text, const std::string& cert_path,
               const std::string& format, const std::string& out_path) {
  auto p = bicyc::parse_params(params_text);
  std::optional<bicyc::CycleCertificate> cert;
  if (!cert_path.empty()) {
    auto parsed = bicyc::certificate_from_json(slurp(cert_path));
    auto declared = bicyc::parse_params(parsed.params_text);
    if (!(declared == p))
      bicyc::fail(bicyc::Errc::CycleParamMismatch,
                  "certificate declares " + declared.render());
    cert = bicyc::verify_certificate(p, parsed.cycle);
  }
  auto fmt = format == "dot" ? bicyc::ExportFormat::Dot
                             : bicyc::ExportFormat::EdgeList;
  write_out(out_path, bicyc::export_graph(p, cert, fmt));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicirculant graph toolkit"};
  app.require_subcommand(1);

  bicyc::SearchBudget budget = env_budget();
  std::string params_text, cert_path, out_path, emit_dot;
  std::string strategy = "auto", format = "dot";
  int min_outer = 0;
  bool prefer_oracle = false;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-nodes", budget.max_nodes, "search node budget");
    cmd->add_option("--budget-millis", budget.max_millis,
                    "wall clock budget (ms)");
    cmd->add_option("--seed", budget.seed, "heuristic seed");
  };

  auto* info = app.add_subcommand("info", "parameter structure summary");
  info->add_option("params", params_text, "parameter string")->required();

  auto* find = app.add_subcommand("find", "search for a hamilton cycle");
  find->add_option("params", params_text, "parameter string")->required();
  find->add_option("--strategy", strategy,
                   "exact | heuristic | construct | auto");
  find->add_option("--min-outer", min_outer,
                   "minimum outer edges (exact strategy)");
  find->add_option("--emit-dot", emit_dot, "write DOT with the cycle bold");
  add_budget(find);

  auto* classify = app.add_subcommand("classify", "full strategy cascade");
  classify->add_option("params", params_text, "parameter string")->required();
  classify->add_flag("--prefer-oracle", prefer_oracle,
                     "try plain search before the constructions");
  add_budget(classify);

  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->add_option("params", params_text, "parameter string")->required();
  verify->add_option("certificate", cert_path, "certificate JSON path")
      ->required();

  bicyc::SweepOptions sweep_opts;
  sweep_opts.budget = budget;
  auto* swp = app.add_subcommand("sweep", "classify a parameter universe");
  swp->add_option("--m-max", sweep_opts.m_max, "ring size bound")->required();
  swp->add_option("--d-max", sweep_opts.d_max, "degree bound")->required();
  swp->add_option("--jobs", sweep_opts.jobs, "worker threads");
  swp->add_option("--out", out_path, "report path (default stdout)");
  swp->add_option("--agreement-m-max", sweep_opts.agreement_m_max,
                  "oracle cross-check bound");
  swp->add_flag("--prefer-oracle", sweep_opts.prefer_oracle,
                "oracle before constructions");

  auto* exp = app.add_subcommand("export", "DOT / edge list export");
  exp->add_option("params", params_text, "parameter string")->required();
  exp->add_option("--cycle", cert_path, "certificate JSON to highlight");
  exp->add_option("--format", format, "dot | edgelist");
  exp->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(params_text);
    if (find->parsed())
      return cmd_find(params_text, strategy, min_outer, budget, emit_dot);
    if (classify->parsed())
      return cmd_classify(params_text, budget, prefer_oracle);
    if (verify->parsed()) return cmd_verify(params_text, cert_path);
    if (swp->parsed()) {
      sweep_opts.budget = budget;
      return cmd_sweep(sweep_opts, out_path);
    }
    if (exp->parsed())
      return cmd_export(params_text, cert_path, format, out_path);
  } catch (const bicyc::Error& e) {
    return semantic_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
