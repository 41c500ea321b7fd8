#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace specrange {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard; the double extraction below avoids std::uniform_real_distribution,
/// whose output is implementation-defined. Outputs are therefore identical
/// across platforms and standard libraries for a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    int index(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Random point on the unit sphere in R^n.
    Eigen::VectorXd unit_vector(int n) {
        Eigen::VectorXd v(n);
        do {
            for (int i = 0; i < n; ++i) v[i] = normal();
        } while (v.norm() < 1e-12);
        return v / v.norm();
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace specrange
