#pragma once

#include <string>

namespace camc {

/// Shortest round-trip decimal form of a double (used by every writer).
std::string format_double(double v);

}  // namespace camc
