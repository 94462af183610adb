#pragma once

// DIMACS CNF files and solver model output.

#include <gridcolor/encode.hpp>
#include <gridcolor/errors.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gridcolor {

/// `p cnf V C` then one 0-terminated clause per line. Comment lines are
/// written first, each prefixed with `c `.
void write_dimacs(std::ostream &out, const CnfInstance &cnf, const std::vector<std::string> &comments = {});
std::string to_dimacs(const CnfInstance &cnf);

/// Throws ParseError on a missing/incorrect header, out-of-range literals,
/// an unterminated final clause, or a clause count that disagrees with it.
CnfInstance parse_dimacs(std::istream &in);

/// Accepts `v`-prefixed competition output or bare lines of signed
/// integers; `0` ends the model, `c` and `s` lines are skipped. Variables not
/// mentioned are false. With var_count given, larger ids are rejected.
Model parse_dimacs_model(std::istream &in, std::optional<int> var_count = std::nullopt);

} // namespace gridcolor
