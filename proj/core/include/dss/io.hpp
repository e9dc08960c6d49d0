#pragma once

#include <string>
#include <string_view>

#include "dss/bsa.hpp"
#include "dss/hermitian.hpp"
#include "dss/nptcheck.hpp"
#include "dss/oracle.hpp"
#include "dss/state.hpp"

namespace dss {

// State files: {"n": <int>, "p": [<float>, ...]} with len(p) = n+1.
// All malformed input (bad JSON, wrong lengths, invalid probabilities) maps
// to std::invalid_argument with a human-readable message.
DssState parse_state_json(std::string_view text);
DssState read_state_file(const std::string& path);
std::string state_to_json(const DssState& s);
void write_state_file(const std::string& path, const DssState& s);

// Matrices: {"dim": d, "re": [[...]], "im": [[...]]}.
std::string matrix_to_json(const HermitianMatrix& h);
HermitianMatrix parse_matrix_json(std::string_view text);

std::string report_to_json(const NptReport& report);
std::string report_to_json(const BsaResult& result);
std::string report_to_json(const LemmaReport& report);
std::string report_to_json(const OracleReport& report);

} // namespace dss
