#ifndef PERMTOP_REPORT_HPP
#define PERMTOP_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace permtop {

struct Check {
  std::string name;
  bool passed = true;
  std::size_t samples = 0;
  std::string detail; ///< first counterexample or a short summary
};

struct Witness {
  std::string name;
  std::string literal;
};

/// Result of one command. Serialization is canonical: keys sorted, fixed
/// formatting, and timings left out unless requested, so equal inputs give
/// equal bytes.
struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<Check> verdicts;
  std::vector<Witness> witnesses;
  std::uint64_t seed = 0;
  std::map<std::string, double> timings_ms;

  bool passed() const;
};

enum class Format { Text, Json };

std::string emit_report(const Report &report, Format format, bool include_timings = false);

} // namespace permtop

#endif // PERMTOP_REPORT_HPP
