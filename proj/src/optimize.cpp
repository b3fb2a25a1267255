#include "tangle3/optimize.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace tangle3 {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

PatternSearchResult pattern_search(const Objective& f, std::vector<double> x0,
                                   const PatternSearchOptions& options) {
    const std::size_t dim = x0.size();
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    PatternSearchResult result{std::move(x0), 0.0, 0, options.initial_step, false};
    result.value = f(result.x);
    result.evaluations = 1;

    std::vector<double> u(dim);
    std::vector<double> direction(dim);
    std::vector<double> trial(dim);

    double& step = result.final_step;
    while (step >= options.min_step && result.evaluations < options.max_evaluations) {
        if (options.rotate_basis) {
            double norm2 = 0.0;
            for (auto& ui : u) {
                ui = gauss(rng);
                norm2 += ui * ui;
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& ui : u) ui *= inv;
        }

        bool improved = false;
        for (std::size_t k = 0; k < dim && result.evaluations < options.max_evaluations; ++k) {
            // k-th column of I - 2 u u^T (or e_k)
            for (std::size_t i = 0; i < dim; ++i) {
                direction[i] = (i == k ? 1.0 : 0.0) - (options.rotate_basis ? 2.0 * u[i] * u[k] : 0.0);
            }
            for (const double sign : {1.0, -1.0}) {
                if (result.evaluations >= options.max_evaluations) break;
                for (std::size_t i = 0; i < dim; ++i) trial[i] = result.x[i] + sign * step * direction[i];
                const double value = f(trial);
                ++result.evaluations;
                if (value < result.value) {
                    result.value = value;
                    result.x.swap(trial);
                    trial.resize(dim);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    result.converged = step < options.min_step;
    return result;
}

}  // namespace tangle3
