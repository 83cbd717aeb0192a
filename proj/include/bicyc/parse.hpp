#ifndef BICYC_PARSE_HPP
#define BICYC_PARSE_HPP

#include <string>

#include "bicyc/params.hpp"

namespace bicyc {

/// Grammar: `B(m; R; S; T)` with comma-separated residue lists and `_` for
/// an empty list, plus the shorthands `GP(m,k)`, `I(m,j,k)` and `H(m; S)`.
/// Whitespace-insensitive. Syntax errors carry the character position;
/// semantic errors are the validation failures of the parameter factory.
BicirculantParams parse_params(const std::string& text);

}  // namespace bicyc

#endif
