#include "permtop/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace permtop {

bool Report::passed() const
{
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Check &c) { return c.passed; });
}

namespace {

std::string to_json(const Report &r, bool include_timings)
{
  nlohmann::json j;
  j["command"] = r.command;
  j["params"] = nlohmann::json::object();
  for (const auto &[k, v] : r.params)
    j["params"][k] = v;
  j["seed"] = r.seed;
  j["verdicts"] = nlohmann::json::array();
  for (const auto &c : r.verdicts)
    j["verdicts"].push_back(
      {{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"detail", c.detail}});
  j["witnesses"] = nlohmann::json::array();
  for (const auto &w : r.witnesses)
    j["witnesses"].push_back({{"name", w.name}, {"literal", w.literal}});
  // Always present so the schema is fixed; empty unless requested.
  j["timings_ms"] = nlohmann::json::object();
  if (include_timings)
    for (const auto &[k, v] : r.timings_ms)
      j["timings_ms"][k] = std::round(v * 1000.0) / 1000.0;
  return j.dump(2) + "\n";
}

std::string to_text(const Report &r, bool include_timings)
{
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "seed: " << r.seed << "\n";
  for (const auto &[k, v] : r.params)
    os << "param " << k << " = " << v << "\n";
  std::size_t width = 4;
  for (const auto &c : r.verdicts)
    width = std::max(width, c.name.size());
  for (const auto &c : r.verdicts) {
    os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << c.name << "  " << std::right << std::setw(7) << c.samples;
    if (!c.detail.empty())
      os << "  " << c.detail;
    os << "\n";
  }
  for (const auto &w : r.witnesses)
    os << "witness " << w.name << ": " << w.literal << "\n";
  if (include_timings)
    for (const auto &[k, v] : r.timings_ms)
      os << "time " << k << ": " << std::fixed << std::setprecision(3) << v << " ms\n";
  os << (r.passed() ? "result: pass" : "result: FAIL") << "\n";
  return os.str();
}

} // namespace

std::string emit_report(const Report &report, Format format, bool include_timings)
{
  return format == Format::Json ? to_json(report, include_timings)
                                : to_text(report, include_timings);
}

} // namespace permtop
