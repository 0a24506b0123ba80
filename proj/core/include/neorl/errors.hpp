#pragma once

#include <stdexcept>

namespace neorl {

// Invalid parameters, malformed network specs, unknown presets. The message
// names the offending field or construct.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace neorl
