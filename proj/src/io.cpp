#include "typewriter/io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/core.h>

namespace typewriter {

std::string provenance_line(const std::string& resolved_config) {
  return fmt::format("# typewriter {} {}\n", kToolVersion, resolved_config);
}

Code read_code(std::istream& in) {
  Code code{5, {}};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    Word w;
    for (char ch : line) {
      if (ch < '0' || ch > '4') {
        throw std::runtime_error(fmt::format("code file line {}: '{}' is not a base-5 digit", line_no, ch));
      }
      w.push_back(static_cast<Symbol>(ch - '0'));
    }
    if (!code.words.empty() && w.size() != code.length()) {
      throw std::runtime_error(fmt::format("code file line {}: length {} differs from {}", line_no, w.size(),
                                           code.length()));
    }
    code.words.push_back(std::move(w));
  }
  if (code.words.empty()) throw std::runtime_error("code file contains no codewords");
  return code;
}

void write_code(std::ostream& out, const Code& code) {
  for (const auto& w : code.words) {
    for (Symbol s : w) out << static_cast<char>('0' + s);
    out << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << "weight,count\n";
  for (const auto& [w, c] : spectrum.counts) out << w << ',' << c << '\n';
  out << "inf," << spectrum.infinite_count << '\n';
}

void write_sim_result_csv(std::ostream& out, const SimResult& r) {
  out << "trials,errors,estimate,ci95,seed\n";
  out << fmt::format("{},{},{:.17g},{:.17g},{}\n", r.trials, r.errors, r.estimate, r.ci95_halfwidth, r.seed);
}

}  // namespace typewriter
