#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tangle3 {

struct PatternSearchOptions {
    double initial_step = 0.5;
    double min_step = 1e-7;
    int max_evaluations = 5000;
    /// Poll along a freshly rotated orthonormal basis each sweep (random
    /// Householder reflection of the coordinate axes). Off means plain
    /// coordinate directions.
    bool rotate_basis = true;
    std::uint64_t seed = 0;
};

struct PatternSearchResult {
    std::vector<double> x;
    double value;
    int evaluations;
    double final_step;
    bool converged;  // step fell below min_step before the evaluation budget ran out
};

using Objective = std::function<double(std::span<const double>)>;

/// Derivative-free compass search with opportunistic polling: every improving
/// poll is accepted at once, a sweep without improvement halves the step.
/// Deterministic for a fixed seed.
PatternSearchResult pattern_search(const Objective& f, std::vector<double> x0,
                                   const PatternSearchOptions& options);

/// splitmix64 finalizer; derives independent restart seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

}  // namespace tangle3
