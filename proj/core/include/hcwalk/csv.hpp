#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hcwalk/bounds.hpp"

namespace hcwalk::csv {

/// Shortest decimal that reads back to the same double.
std::string format_double(double value);

inline constexpr const char* kReportHeader = "name,n,nu,computed,bound,margin,pass";

/// `name,n,nu,computed,bound,margin,pass` without the newline.
std::string report_row(const bounds::BoundReport& report);

void write_reports(std::ostream& out, const std::vector<bounds::BoundReport>& reports, bool header = true);

}  // namespace hcwalk::csv
