#pragma once

#include <cstdlib>
#include <string>

#include "teichlen/errors.hpp"

namespace teichlen {

/// Scalar used by extended-precision evaluation paths (x86-64: 64-bit
/// significand, which is what the reference computations require).
using Extended = long double;

enum class Precision { Double, Extended };

/// Reads TEICHLEN_PRECISION from the environment ("double" by default).
inline Precision oracle_precision() {
    const char* env = std::getenv("TEICHLEN_PRECISION");
    if (env == nullptr || std::string(env) == "double") return Precision::Double;
    if (std::string(env) == "extended") return Precision::Extended;
    throw InvalidConfig("TEICHLEN_PRECISION must be 'double' or 'extended'");
}

} // namespace teichlen
