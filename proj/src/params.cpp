#include "bicyc/params.hpp"

#include <algorithm>
#include <set>

namespace bicyc {

std::string to_string(const Vertex& v) {
  return (v.side == Side::Outer ? "u" : "v") + std::to_string(v.index);
}

std::string to_string(const EdgeKind& k) {
  switch (k.cls) {
    case EdgeClass::Outer:
      return "outer(" + std::to_string(k.type) + ")";
    case EdgeClass::Inner:
      return "inner(" + std::to_string(k.type) + ")";
    default:
      return "spoke(" + std::to_string(k.type) + ")";
  }
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonSymmetricRimSet: return "NonSymmetricRimSet";
    case Errc::ZeroInRim: return "ZeroInRim";
    case Errc::MissingZeroSpoke: return "MissingZeroSpoke";
    case Errc::UnequalRimSizes: return "UnequalRimSizes";
    case Errc::EmptySpokes: return "EmptySpokes";
    case Errc::InvalidRingSize: return "InvalidRingSize";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::WrongLength: return "WrongLength";
    case Errc::RepeatedVertex: return "RepeatedVertex";
    case Errc::NonAdjacentStep: return "NonAdjacentStep";
    case Errc::OuterInnerCountMismatch: return "OuterInnerCountMismatch";
    case Errc::ShiftNotInS: return "ShiftNotInS";
    case Errc::OddM: return "OddM";
    case Errc::HalfAlreadyPresent: return "HalfAlreadyPresent";
    case Errc::AsymmetricDrop: return "AsymmetricDrop";
    case Errc::NotASubset: return "NotASubset";
    case Errc::TypeNotPresent: return "TypeNotPresent";
    case Errc::HalfTypeForbidden: return "HalfTypeForbidden";
    case Errc::DifferentComponents: return "DifferentComponents";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::BaseCycleInvalid: return "BaseCycleInvalid";
    case Errc::InternalStitchFailure: return "InternalStitchFailure";
    case Errc::TooFewOuterEdges: return "TooFewOuterEdges";
    case Errc::HypothesisUnmet: return "HypothesisUnmet";
    case Errc::OracleFailed: return "OracleFailed";
    case Errc::WrongShape: return "WrongShape";
    case Errc::PathInvalid: return "PathInvalid";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SemanticError: return "SemanticError";
    case Errc::CycleParamMismatch: return "CycleParamMismatch";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

std::vector<int> normalize_residues(int m, std::vector<int> in) {
  std::set<int> seen;
  for (int x : in) seen.insert(mod_norm(x, m));
  return std::vector<int>(seen.begin(), seen.end());
}

void check_rim(int m, const std::vector<int>& rim, const char* which) {
  for (int t : rim) {
    if (t == 0) fail(Errc::ZeroInRim, std::string(which) + " contains 0");
    if (std::find(rim.begin(), rim.end(), mod_norm(-t, m)) == rim.end())
      fail(Errc::NonSymmetricRimSet,
           std::string(which) + " lacks " + std::to_string(mod_norm(-t, m)) +
               " to pair with " + std::to_string(t));
  }
}

}  // namespace

BicirculantParams::BicirculantParams(int m, std::vector<int> outer,
                                     std::vector<int> spokes,
                                     std::vector<int> inner)
    : m_(m),
      outer_(std::move(outer)),
      spokes_(std::move(spokes)),
      inner_(std::move(inner)) {}

BicirculantParams BicirculantParams::make_relaxed(int m,
                                                  std::vector<int> outer,
                                                  std::vector<int> spokes,
                                                  std::vector<int> inner) {
  if (m < 1) fail(Errc::InvalidRingSize, "m must be >= 1");
  auto R = normalize_residues(m, std::move(outer));
  auto S = normalize_residues(m, std::move(spokes));
  auto T = normalize_residues(m, std::move(inner));
  check_rim(m, R, "R");
  check_rim(m, T, "T");
  if (S.empty()) fail(Errc::EmptySpokes, "S is empty");
  if (std::find(S.begin(), S.end(), 0) == S.end())
    fail(Errc::MissingZeroSpoke, "0 not in S");
  return BicirculantParams(m, std::move(R), std::move(S), std::move(T));
}

BicirculantParams BicirculantParams::make(int m, std::vector<int> outer,
                                          std::vector<int> spokes,
                                          std::vector<int> inner) {
  auto p = make_relaxed(m, std::move(outer), std::move(spokes),
                        std::move(inner));
  if (p.outer_.size() != p.inner_.size())
    fail(Errc::UnequalRimSizes,
         "|R| = " + std::to_string(p.outer_.size()) +
             " but |T| = " + std::to_string(p.inner_.size()));
  return p;
}

bool BicirculantParams::has_outer(int t) const {
  return std::binary_search(outer_.begin(), outer_.end(), mod_norm(t, m_));
}
bool BicirculantParams::has_inner(int t) const {
  return std::binary_search(inner_.begin(), inner_.end(), mod_norm(t, m_));
}
bool BicirculantParams::has_spoke(int t) const {
  return std::binary_search(spokes_.begin(), spokes_.end(), mod_norm(t, m_));
}

std::vector<Vertex> BicirculantParams::neighbors(const Vertex& v) const {
  std::set<Vertex> out;
  if (v.side == Side::Outer) {
    for (int a : outer_) out.insert(outer_vertex(mod_norm(v.index + a, m_)));
    for (int c : spokes_) out.insert(inner_vertex(mod_norm(v.index + c, m_)));
  } else {
    for (int b : inner_) out.insert(inner_vertex(mod_norm(v.index + b, m_)));
    for (int c : spokes_) out.insert(outer_vertex(mod_norm(v.index - c, m_)));
  }
  return std::vector<Vertex>(out.begin(), out.end());
}

bool BicirculantParams::adjacent(const Vertex& x, const Vertex& y) const {
  if (x == y) return false;
  if (x.side == Side::Outer && y.side == Side::Outer)
    return has_outer(y.index - x.index);
  if (x.side == Side::Inner && y.side == Side::Inner)
    return has_inner(y.index - x.index);
  const Vertex& u = x.side == Side::Outer ? x : y;
  const Vertex& v = x.side == Side::Outer ? y : x;
  return has_spoke(v.index - u.index);
}

EdgeKind BicirculantParams::classify_edge(const Vertex& x,
                                          const Vertex& y) const {
  if (!adjacent(x, y))
    fail(Errc::NotAnEdge, to_string(x) + " -- " + to_string(y));
  if (x.side == Side::Outer && y.side == Side::Outer)
    return EdgeKind{EdgeClass::Outer,
                    canon_rim(mod_norm(y.index - x.index, m_), m_)};
  if (x.side == Side::Inner && y.side == Side::Inner)
    return EdgeKind{EdgeClass::Inner,
                    canon_rim(mod_norm(y.index - x.index, m_), m_)};
  const Vertex& u = x.side == Side::Outer ? x : y;
  const Vertex& v = x.side == Side::Outer ? y : x;
  return EdgeKind{EdgeClass::Spoke, mod_norm(v.index - u.index, m_)};
}

BicirculantParams BicirculantParams::shift_spokes(int c) const {
  c = mod_norm(c, m_);
  if (!has_spoke(c)) fail(Errc::ShiftNotInS, std::to_string(c));
  std::vector<int> shifted;
  shifted.reserve(spokes_.size());
  for (int t : spokes_) shifted.push_back(mod_norm(t - c, m_));
  return make_relaxed(m_, outer_, std::move(shifted), inner_);
}

BicirculantParams BicirculantParams::add_half_types() const {
  if (m_ % 2 != 0) fail(Errc::OddM, "m = " + std::to_string(m_));
  int h = m_ / 2;
  if (has_outer(h) || has_inner(h))
    fail(Errc::HalfAlreadyPresent, "type " + std::to_string(h));
  auto R = outer_;
  auto T = inner_;
  R.push_back(h);
  T.push_back(h);
  return make_relaxed(m_, std::move(R), spokes_, std::move(T));
}

BicirculantParams BicirculantParams::remove_types(
    const std::vector<int>& outer_drop,
    const std::vector<int>& inner_drop) const {
  auto prepare = [&](const std::vector<int>& drop, const std::vector<int>& rim,
                     bool outer) {
    std::set<int> d;
    for (int x : drop) d.insert(mod_norm(x, m_));
    for (int t : d) {
      if (std::find(rim.begin(), rim.end(), t) == rim.end())
        fail(Errc::NotASubset, (outer ? "outer " : "inner ") +
                                   std::to_string(t) + " not a rim type");
      if (!d.count(mod_norm(-t, m_)))
        fail(Errc::AsymmetricDrop, (outer ? "outer " : "inner ") +
                                       std::to_string(t) +
                                       " dropped without its negative");
    }
    std::vector<int> kept;
    for (int t : rim)
      if (!d.count(t)) kept.push_back(t);
    return kept;
  };
  auto R = prepare(outer_drop, outer_, true);
  auto T = prepare(inner_drop, inner_, false);
  return BicirculantParams(m_, std::move(R), spokes_, std::move(T));
}

std::string BicirculantParams::render() const {
  auto list = [](const std::vector<int>& v) {
    if (v.empty()) return std::string("_");
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out;
  };
  return "B(" + std::to_string(m_) + "; " + list(outer_) + "; " +
         list(spokes_) + "; " + list(inner_) + ")";
}

}  // namespace bicyc
