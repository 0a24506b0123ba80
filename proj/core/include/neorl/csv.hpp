#pragma once

#include <string>

namespace neorl {

// Shortest round-trip decimal form, locale-independent. All file output goes
// through this so emitted CSVs are byte-stable.
std::string format_double(double v);

}  // namespace neorl
