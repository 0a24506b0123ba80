#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "neorl/harness.hpp"

namespace neorl {

// Static line chart of mean accumulated reward against minutes, one polyline
// per named curve.
void write_curves_svg(std::ostream& os,
                      const std::vector<std::pair<std::string, AggregateCurve>>& curves,
                      const std::string& title = "mean accumulated reward");

}  // namespace neorl
