#include "hcwalk/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hcwalk::csv {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

std::string report_row(const bounds::BoundReport& r) {
  return r.name + ',' + std::to_string(r.n) + ',' + std::to_string(r.nu) + ',' + format_double(r.computed) + ',' +
         format_double(r.bound) + ',' + format_double(r.margin) + ',' + (r.pass ? "true" : "false");
}

void write_reports(std::ostream& out, const std::vector<bounds::BoundReport>& reports, bool header) {
  if (header) out << kReportHeader << '\n';
  for (const auto& r : reports) out << report_row(r) << '\n';
}

}  // namespace hcwalk::csv
