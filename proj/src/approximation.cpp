#include "specrange/approximation.hpp"

#include <cmath>
#include <string>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

struct Expansion {
    Eigen::VectorXd coeffs;
    double norm_sq = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

Expansion expand(const OperatorSpectrumView& spectrum, const Signal& x) {
    if (x.size() != spectrum.values.size()) {
        throw validation_error("signal dimension does not match the operator spectrum");
    }
    Expansion e;
    e.norm_sq = x.squaredNorm();
    if (!(e.norm_sq > 0.0) || !x.allFinite()) {
        throw validation_error("signal must be nonzero and finite");
    }
    e.coeffs = spectrum.vectors.transpose() * x;
    const Eigen::VectorXd weights = e.coeffs.cwiseAbs2() / e.norm_sq;
    e.mean = weights.dot(spectrum.values);
    e.variance = weights.dot((spectrum.values.array() - e.mean).square().matrix());
    return e;
}

ExpansionReport report_for(const OperatorSpectrumView& spectrum, const Signal& x,
                           const Expansion& e, const std::vector<int>& kept, double bound) {
    ExpansionReport report;
    report.kept = kept;
    report.reconstruction = Signal::Zero(x.size());
    for (int k : kept) report.reconstruction += e.coeffs[k] * spectrum.vectors.col(k);
    report.actual_error_sq = (x - report.reconstruction).squaredNorm();
    report.bound = bound;
    report.mean = e.mean;
    report.variance = e.variance;
    return report;
}

}  // namespace

ExpansionReport truncate_by_threshold(const OperatorSpectrumView& spectrum, const Signal& x,
                                      double s) {
    const Expansion e = expand(spectrum, x);
    const double top = spectrum.values[0];
    if (!(s < top)) {
        throw validation_error("threshold s = " + std::to_string(s) +
                               " must be below the top eigenvalue " + std::to_string(top));
    }
    std::vector<int> kept;
    for (int k = 0; k < spectrum.values.size(); ++k) {
        if (spectrum.values[k] >= s) kept.push_back(k);
    }
    const double bound = (top - e.mean) / (top - s) * e.norm_sq;
    return report_for(spectrum, x, e, kept, bound);
}

ExpansionReport truncate_by_interval(const OperatorSpectrumView& spectrum, const Signal& x,
                                     double a) {
    if (!(a > 0.0)) throw validation_error("interval radius a must be positive");
    const Expansion e = expand(spectrum, x);
    std::vector<int> kept;
    for (int k = 0; k < spectrum.values.size(); ++k) {
        if (std::abs(spectrum.values[k] - e.mean) <= a) kept.push_back(k);
    }
    const double bound = e.variance / (a * a) * e.norm_sq;
    return report_for(spectrum, x, e, kept, bound);
}

SpectralDistribution spectral_distribution(const OperatorSpectrumView& spectrum, const Signal& x) {
    const Expansion e = expand(spectrum, x);
    SpectralDistribution dist;
    dist.input_was_normalized = std::abs(e.norm_sq - 1.0) <= 1e-12;
    dist.mu = e.coeffs.cwiseAbs2() / e.norm_sq;
    return dist;
}

}  // namespace specrange
