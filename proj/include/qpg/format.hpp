#pragma once

#include <cstdio>
#include <string>

namespace qpg {

/// Formats a double with 17 significant digits, the fixed precision used by
/// every data file the project writes.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace qpg
