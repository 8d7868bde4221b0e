#ifndef PERMTOP_SUITES_HPP
#define PERMTOP_SUITES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "permtop/report.hpp"

namespace permtop {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
};

/// s2: group laws, separation and restricted-Zariski witnesses, finite
///     coincidence on S3 and S4.
/// s5: centralizers and self-normalizing free factors.
/// s6: closed-ball, point-support and isolation witnesses.
/// s7: partition topology witnesses.
std::vector<std::string> suite_names();

/// Runs one named suite. Throws SpecMismatch for an unknown name.
std::vector<Check> run_suite(const std::string &name, const SuiteOptions &opts);

} // namespace permtop

#endif // PERMTOP_SUITES_HPP
