#ifndef BICYC_EXPORT_HPP
#define BICYC_EXPORT_HPP

#include <optional>
#include <string>

#include "bicyc/certificate.hpp"
#include "bicyc/params.hpp"

namespace bicyc {

enum class ExportFormat { Dot, EdgeList };

/// Deterministic graph export. DOT colors the edge classes and draws
/// cycle edges bold; the edge list is one `u3 v5` pair per line, sorted.
std::string export_graph(const BicirculantParams& p,
                         const std::optional<CycleCertificate>& cycle,
                         ExportFormat format);

}  // namespace bicyc

#endif
