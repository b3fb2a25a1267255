#pragma once

#include <cstdio>
#include <string>

namespace tangle3 {

/// %.17g: shortest fixed-width form that round-trips every double.
inline std::string format_g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

}  // namespace tangle3
