#include "bicyc/certificate.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace bicyc {

std::vector<Vertex> canonicalize_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3) return cycle;
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  // pick the direction with the smaller second vertex
  if (cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

CycleCertificate verify_certificate(const BicirculantParams& p,
                                    const std::vector<Vertex>& cycle) {
  const size_t want = static_cast<size_t>(p.vertex_count());
  if (cycle.size() != want)
    fail(Errc::WrongLength, "got " + std::to_string(cycle.size()) +
                                " vertices, expected " + std::to_string(want));
  if (cycle.size() < 3)
    fail(Errc::WrongLength, "a cycle needs at least 3 vertices");

  std::set<Vertex> seen;
  for (const Vertex& v : cycle) {
    if (!p.valid_vertex(v))
      fail(Errc::NonAdjacentStep, to_string(v) + " out of range");
    if (!seen.insert(v).second) fail(Errc::RepeatedVertex, to_string(v));
  }

  CycleCertificate cert;
  for (size_t i = 0; i < cycle.size(); ++i) {
    const Vertex& x = cycle[i];
    const Vertex& y = cycle[(i + 1) % cycle.size()];
    if (!p.adjacent(x, y))
      fail(Errc::NonAdjacentStep, "step " + std::to_string(i) + ": " +
                                      to_string(x) + " -- " + to_string(y));
    switch (p.classify_edge(x, y).cls) {
      case EdgeClass::Outer: ++cert.outer_count; break;
      case EdgeClass::Inner: ++cert.inner_count; break;
      case EdgeClass::Spoke: ++cert.spoke_count; break;
    }
  }
  // cannot fire on a true hamilton cycle of a bicirculant
  if (cert.outer_count != cert.inner_count)
    fail(Errc::OuterInnerCountMismatch,
         std::to_string(cert.outer_count) + " outer vs " +
             std::to_string(cert.inner_count) + " inner");

  cert.vertices = canonicalize_cycle(cycle);
  return cert;
}

std::string certificate_to_json(const BicirculantParams& p,
                                const CycleCertificate& c) {
  nlohmann::json j;
  j["params"] = p.render();
  nlohmann::json verts = nlohmann::json::array();
  for (const Vertex& v : c.vertices)
    verts.push_back({v.side == Side::Outer ? "u" : "v", v.index});
  j["cycle"] = std::move(verts);
  j["counts"] = {{"outer", c.outer_count},
                 {"inner", c.inner_count},
                 {"spoke", c.spoke_count}};
  return j.dump();
}

ParsedCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::SemanticError, std::string("bad certificate JSON: ") + e.what());
  }
  ParsedCertificate out;
  try {
    out.params_text = j.at("params").get<std::string>();
    for (const auto& entry : j.at("cycle")) {
      std::string side = entry.at(0).get<std::string>();
      int index = entry.at(1).get<int>();
      if (side != "u" && side != "v")
        fail(Errc::SemanticError, "vertex side must be \"u\" or \"v\"");
      out.cycle.push_back(
          Vertex{side == "u" ? Side::Outer : Side::Inner, index});
    }
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::SemanticError, std::string("bad certificate schema: ") + e.what());
  }
  return out;
}

}  // namespace bicyc
