#pragma once

// End-to-end construction: drawing -> epsilon -> surd perturbation -> snap
// -> monomial embedding -> lift, certifying after every snap and doubling the
// precision (with fresh jitter) until all certificates hold or the precision
// cap is reached.

#include "hjpoly/certify.hpp"
#include "hjpoly/realize.hpp"

namespace hjpoly {

struct BuildResult {
    Realization realization;
    CertBundle certificates;
    unsigned snap_attempts = 0;  // 1 = first precision worked
};

BuildResult realize_pipeline(const DrawingConfig& cfg);

}  // namespace hjpoly
