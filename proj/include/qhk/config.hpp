#pragma once

#include <string>

#include "qhk/rational.hpp"

namespace qhk {

/// Run-wide configuration; every report echoes these fields.
struct RunConfig {
    long trunc_order = 24;                  // default relative truncation order
    std::string eps_convention = "eps=1/2"; // threshold base for normalization margins
    unsigned long seed = 20240915;
    bool strict = false;
    std::string format = "text";  // or "json"
};

/// Mutable process-wide configuration. QH_TRUNC overrides the truncation order
/// on first access.
RunConfig& global_config();

Rational default_order();

}  // namespace qhk
