#pragma once

#include <ostream>
#include <string>

#include "thermo/cli/sweep.hpp"

namespace thermo::cli {

/// 12 significant digits in scientific notation, independent of the locale.
/// Non-finite values print as nan, inf or -inf.
std::string format_number(double v);

void write_csv(std::ostream& out, const SweepTable& table);
void write_json(std::ostream& out, const SweepTable& table);

/// Line plot of δT against the first axis, one curve per value of the second axis.
/// Log axes are used for a log sweep and whenever δT spans more than two decades.
void write_svg(std::ostream& out, const SweepTable& table, bool log_x);

}  // namespace thermo::cli
