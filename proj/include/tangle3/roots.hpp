#pragma once

#include <functional>

namespace tangle3 {

struct RootResult {
    double x;
    double f;
    int iterations;
};

/// Refines a sign-changing bracket [lo, hi] to |dx| <= 1e-10 (in practice far
/// tighter) with a bracketing inverse-interpolation hybrid. Throws NoRoot when
/// f(lo) and f(hi) share a sign.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi);

/// Scans `subintervals` equal pieces of [lo, hi] from `hi` downward and refines
/// the first sign change, i.e. the largest root. Throws NoRoot if none is found.
RootResult largest_root(const std::function<double(double)>& f, double lo, double hi,
                        int subintervals = 2048);

}  // namespace tangle3
