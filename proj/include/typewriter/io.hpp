#pragma once

#include <iosfwd>
#include <string>

#include "typewriter/channel.hpp"
#include "typewriter/construction.hpp"

namespace typewriter {

inline constexpr const char* kToolVersion = "1.0.0";

// "# typewriter <version> <config>" provenance comment line, newline included.
std::string provenance_line(const std::string& resolved_config);

// One codeword per line as a string of base-5 digits. Blank lines and lines
// starting with '#' are skipped.
Code read_code(std::istream& in);
void write_code(std::ostream& out, const Code& code);

// weight,count rows in increasing weight, then inf,count.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

// Header trials,errors,estimate,ci95,seed followed by one row.
void write_sim_result_csv(std::ostream& out, const SimResult& result);

}  // namespace typewriter
