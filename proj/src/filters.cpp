#include "specrange/filters.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "specrange/errors.hpp"

namespace specrange {

namespace {

constexpr double kRangeTol = 1e-12;

void check_range_01(const Eigen::VectorXd& v, const char* what) {
    if (v.size() == 0) throw validation_error(std::string(what) + " is empty");
    for (int i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] < -kRangeTol || v[i] > 1.0 + kRangeTol) {
            throw validation_error(std::string(what) + " entry " + std::to_string(i) +
                                   " outside [0, 1]");
        }
    }
}

void check_sup_norm(const Eigen::VectorXd& v, const char* what) {
    if (std::abs(v.maxCoeff() - 1.0) > kRangeTol) {
        throw validation_error(std::string(what) + " must attain sup-norm 1");
    }
}

int count_ones(const Eigen::VectorXd& v) {
    int count = 0;
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v[i] - 1.0) <= kRangeTol) ++count;
    }
    return count;
}

}  // namespace

const char* to_string(PairKind kind) {
    switch (kind) {
        case PairKind::projection_projection: return "projection-projection";
        case PairKind::distance_projection: return "distance-projection";
        case PairKind::modified_distance_projection: return "modified-distance-projection";
        case PairKind::distance_laplace: return "distance-laplace";
        case PairKind::laplace_laplace: return "laplace-laplace";
        case PairKind::custom: return "custom";
    }
    return "custom";
}

PairKind pair_kind_from_string(const std::string& name) {
    if (name == "projection-projection" || name == "projection") return PairKind::projection_projection;
    if (name == "distance-projection" || name == "distance") return PairKind::distance_projection;
    if (name == "modified-distance-projection" || name == "modified-distance")
        return PairKind::modified_distance_projection;
    if (name == "distance-laplace") return PairKind::distance_laplace;
    if (name == "laplace-laplace") return PairKind::laplace_laplace;
    if (name == "custom") return PairKind::custom;
    throw validation_error("unknown filter pair kind '" + name + "'");
}

SpatialFilter projection_spatial(int n, const std::vector<int>& nodes) {
    if (nodes.empty()) throw validation_error("node subset A must be nonempty");
    Eigen::VectorXd f = Eigen::VectorXd::Zero(n);
    for (int v : nodes) {
        if (v < 0 || v >= n) throw validation_error("node index " + std::to_string(v) + " out of range");
        f[v] = 1.0;
    }
    return SpatialFilter{std::move(f)};
}

SpectralFilter projection_spectral(int n, const std::vector<int>& freqs) {
    if (freqs.empty()) throw validation_error("frequency subset B must be nonempty");
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (int k : freqs) {
        if (k < 1 || k > n) {
            throw validation_error("frequency index " + std::to_string(k) +
                                   " out of range (1-based)");
        }
        g[k - 1] = 1.0;
    }
    return SpectralFilter{std::move(g)};
}

SpatialFilter distance_spatial(const GeodesicProfile& profile, double alpha) {
    if (!(alpha > 0.0)) throw validation_error("distance filter exponent alpha must be positive");
    if (profile.dmax < 1) throw validation_error("geodesic profile has dmax < 1");
    const int n = static_cast<int>(profile.dist.size());
    Eigen::VectorXd f(n);
    for (int v = 0; v < n; ++v) {
        const double ratio = static_cast<double>(profile.dist[v]) / profile.dmax;
        f[v] = 1.0 - std::pow(ratio, alpha);
    }
    return SpatialFilter{std::move(f)};
}

SpectralFilter laplace_spectral(const Eigen::VectorXd& lambda) {
    if (lambda.size() == 0) throw validation_error("eigenvalue vector is empty");
    Eigen::VectorXd g(lambda.size());
    for (int k = 0; k < lambda.size(); ++k) {
        const double lam = std::clamp(lambda[k], 0.0, 2.0);
        g[k] = 1.0 - 0.5 * lam;
    }
    return SpectralFilter{std::move(g)};
}

SpectralFilter smoothed_bandlimit(const Eigen::VectorXd& lambda, const std::vector<int>& freqs,
                                  double beta) {
    if (freqs.empty()) throw validation_error("frequency subset B must be nonempty");
    if (!(beta > 0.0)) throw validation_error("smoothing exponent beta must be positive");
    const int n = static_cast<int>(lambda.size());
    std::set<int> band(freqs.begin(), freqs.end());
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
    for (int k : band) {
        if (k < 1 || k > n) {
            throw validation_error("frequency index " + std::to_string(k) +
                                   " out of range (1-based)");
        }
        const double lam = std::clamp(lambda[k - 1], 0.0, 2.0);
        g[k - 1] = 1.0 - std::pow(0.5 * lam, beta);
    }
    if (!band.count(1)) {
        const double top = g.maxCoeff();
        if (!(top > 0.0)) {
            throw validation_error("smoothed bandlimit filter vanishes; cannot normalize");
        }
        g /= top;
    }
    return SpectralFilter{std::move(g)};
}

SpatialFilter spatial_from_values(Eigen::VectorXd f) {
    check_range_01(f, "spatial filter");
    check_sup_norm(f, "spatial filter");
    return SpatialFilter{std::move(f)};
}

SpectralFilter spectral_from_values(Eigen::VectorXd ghat) {
    check_range_01(ghat, "spectral filter");
    check_sup_norm(ghat, "spectral filter");
    return SpectralFilter{std::move(ghat)};
}

SpatialFilter reflect(const SpatialFilter& filter) {
    return SpatialFilter{Eigen::VectorXd::Ones(filter.f.size()) - filter.f};
}

SpectralFilter reflect(const SpectralFilter& filter) {
    return SpectralFilter{Eigen::VectorXd::Ones(filter.ghat.size()) - filter.ghat};
}

std::vector<int> bandlimit_set(int bandwidth) {
    if (bandwidth < 1) throw validation_error("bandwidth must be at least 1");
    std::vector<int> freqs(bandwidth);
    for (int k = 0; k < bandwidth; ++k) freqs[k] = k + 1;
    return freqs;
}

PairValidation validate(const FilterPair& pair) {
    PairValidation report;
    const Eigen::VectorXd& f = pair.spatial.f;
    const Eigen::VectorXd& g = pair.spectral.ghat;

    auto in_range = [](const Eigen::VectorXd& v) {
        return v.size() > 0 && v.allFinite() && v.minCoeff() >= -kRangeTol &&
               v.maxCoeff() <= 1.0 + kRangeTol;
    };
    report.spatial_in_range = in_range(f);
    report.spectral_in_range = in_range(g);
    report.spatial_sup_norm_ok = f.size() > 0 && std::abs(f.maxCoeff() - 1.0) <= kRangeTol;
    report.spectral_sup_norm_ok = g.size() > 0 && std::abs(g.maxCoeff() - 1.0) <= kRangeTol;
    report.mf_one_multiplicity = count_ones(f);
    report.cg_one_multiplicity = count_ones(g);

    if (!report.spatial_in_range) report.messages.push_back("spatial filter leaves [0, 1]");
    if (!report.spatial_sup_norm_ok) report.messages.push_back("spatial filter sup-norm is not 1");
    if (!report.spectral_in_range) report.messages.push_back("spectral filter leaves [0, 1]");
    if (!report.spectral_sup_norm_ok) report.messages.push_back("spectral filter sup-norm is not 1");
    if (report.mf_one_multiplicity > 1) {
        report.messages.push_back("eigenvalue 1 of M_f has multiplicity " +
                                  std::to_string(report.mf_one_multiplicity));
    }
    if (report.cg_one_multiplicity > 1) {
        report.messages.push_back("eigenvalue 1 of C_g has multiplicity " +
                                  std::to_string(report.cg_one_multiplicity));
    }
    return report;
}

}  // namespace specrange
