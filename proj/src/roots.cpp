#include "tangle3/roots.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/toms748_solve.hpp>

#include "tangle3/errors.hpp"

namespace tangle3 {

namespace {

constexpr std::uintmax_t kMaxIterations = 200;

// Stop once the bracket is down to a few ulps.
struct BracketTolerance {
    bool operator()(double a, double b) const {
        return std::abs(b - a) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                      std::max(std::abs(a), std::abs(b));
    }
};

}  // namespace

RootResult find_root(const std::function<double(double)>& f, double lo, double hi) {
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return {lo, 0.0, 0};
    if (f_hi == 0.0) return {hi, 0.0, 0};
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw NoRoot("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::uintmax_t iterations = kMaxIterations;
    const auto [a, b] =
        boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, BracketTolerance{}, iterations);
    const double fa = f(a);
    const double fb = f(b);
    return std::abs(fa) <= std::abs(fb) ? RootResult{a, fa, static_cast<int>(iterations)}
                                        : RootResult{b, fb, static_cast<int>(iterations)};
}

RootResult largest_root(const std::function<double(double)>& f, double lo, double hi,
                        int subintervals) {
    if (subintervals < 1 || !(lo < hi)) throw NoRoot("largest_root: empty scan interval");
    const double width = (hi - lo) / subintervals;
    double right = hi;
    double f_right = f(right);
    for (int k = 1; k <= subintervals; ++k) {
        const double left = k == subintervals ? lo : hi - k * width;
        const double f_left = f(left);
        if (f_right == 0.0) return {right, 0.0, 0};
        if ((f_left > 0.0) != (f_right > 0.0) || f_left == 0.0) return find_root(f, left, right);
        right = left;
        f_right = f_left;
    }
    throw NoRoot("largest_root: no sign change in [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");
}

}  // namespace tangle3
