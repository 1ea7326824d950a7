#include "dfsrg/cli/incidence_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dfsrg::cli {

namespace {

std::runtime_error bad_line(std::size_t line, const std::string& what) {
  return std::runtime_error("incidence line " + std::to_string(line) + ": " + what);
}

std::vector<long long> numbers(const std::string& text, std::size_t line) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0) throw bad_line(line, "expected a nonnegative integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

IncidenceStructure read_incidence(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<std::vector<std::size_t>> lines;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto nums = numbers(raw, line);
    if (nums.empty()) continue;
    if (!header) {
      if (nums.size() != 2) throw bad_line(line, "header must be 'P L'");
      header.emplace(nums[0], nums[1]);
      continue;
    }
    if (lines.size() == header->second) throw bad_line(line, "more lines than declared");
    lines.emplace_back(nums.begin(), nums.end());
  }
  if (!header) throw std::runtime_error("incidence input is empty");
  if (lines.size() != header->second) {
    throw std::runtime_error("incidence input declares " + std::to_string(header->second) + " lines, found " +
                             std::to_string(lines.size()));
  }
  return IncidenceStructure(header->first, std::move(lines));
}

void write_incidence(std::ostream& out, const IncidenceStructure& inc) {
  out << inc.num_points() << ' ' << inc.num_lines() << '\n';
  for (const auto& l : inc.lines()) {
    for (std::size_t i = 0; i < l.size(); ++i) out << (i ? " " : "") << l[i];
    out << '\n';
  }
}

}  // namespace dfsrg::cli
