#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "specrange/approximation.hpp"
#include "specrange/errors.hpp"

using namespace specrange;

namespace {

struct Setup {
    Graph g;
    EigenDecomposition decomp;
    OperatorBundle bundle;
    SOperatorSpectrum spectrum;
    RotatedOperator rot;
};

Setup make_setup(Rng& rng, int n) {
    Setup s;
    s.g = fixtures::random_connected_graph(rng, n);
    s.decomp = eig_sym(normalized_laplacian(s.g));
    s.bundle = build_bundle(s.decomp, fixtures::random_pair(rng, n));
    s.spectrum = s_spectrum(s.bundle);
    s.rot = rotated(s.bundle, 1.3);
    return s;
}

}  // namespace

TEST_CASE("threshold truncation") {
    Rng rng(29);
    const Setup s = make_setup(rng, 10);

    SUBCASE("top eigenvector is always retained with zero error") {
        const Signal x = s.spectrum.Psi.col(0);
        const ExpansionReport report =
            truncate_by_threshold(s.spectrum, x, s.spectrum.sigma[0] - 0.1);
        CHECK(report.actual_error_sq <= 1e-20);
        CHECK(report.bound >= -1e-12);
    }
    SUBCASE("bottom eigenvector: exact bound formula") {
        const Signal x = s.spectrum.Psi.col(9);
        const double top = s.spectrum.sigma[0];
        const double bottom = s.spectrum.sigma[9];
        const double threshold = 0.5 * (top + bottom);
        const ExpansionReport report = truncate_by_threshold(s.spectrum, x, threshold);
        CHECK(report.actual_error_sq == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(report.bound ==
              doctest::Approx((top - bottom) / (top - threshold)).epsilon(1e-10));
        CHECK(report.bound >= report.actual_error_sq - 1e-9);
    }
    SUBCASE("random signals on an s-grid: actual error never beats the bound") {
        for (int trial = 0; trial < 50; ++trial) {
            const Signal x = rng.unit_vector(10) * rng.uniform(0.2, 3.0);
            const double top = s.spectrum.sigma[0];
            const double bottom = s.spectrum.sigma[9];
            for (int j = 0; j < 20; ++j) {
                const double threshold = bottom + (top - bottom) * (j + 0.5) / 20.0;
                const ExpansionReport report = truncate_by_threshold(s.spectrum, x, threshold);
                CHECK(report.actual_error_sq <= report.bound + 1e-9);
                // independent oracle: dropped mass via the mu distribution
                const SpectralDistribution mu = spectral_distribution(s.spectrum, x);
                double dropped = 0.0;
                for (int k = 0; k < 10; ++k) {
                    if (s.spectrum.sigma[k] < threshold) dropped += mu.mu[k];
                }
                CHECK(report.actual_error_sq ==
                      doctest::Approx(dropped * x.squaredNorm()).epsilon(1e-9));
            }
        }
    }
    SUBCASE("ties at sigma_k = s are kept") {
        const double s_tied = s.spectrum.sigma[3];
        const ExpansionReport report =
            truncate_by_threshold(s.spectrum, rng.unit_vector(10), s_tied);
        bool found = false;
        for (int k : report.kept) found = found || k == 3;
        CHECK(found);
    }
    SUBCASE("bound tightness as s approaches sigma_n from above") {
        const Signal x = s.spectrum.Psi.col(9);
        const double bottom = s.spectrum.sigma[9];
        const ExpansionReport report = truncate_by_threshold(s.spectrum, x, bottom + 1e-6);
        REQUIRE(s.spectrum.sigma[0] - bottom > 0.1);
        CHECK(report.actual_error_sq == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(report.bound == doctest::Approx(report.actual_error_sq).epsilon(1e-3));
    }
    SUBCASE("s >= sigma_1 rejected") {
        CHECK_THROWS_AS(truncate_by_threshold(s.spectrum, rng.unit_vector(10),
                                              s.spectrum.sigma[0]),
                        validation_error);
    }
    SUBCASE("the R-operator variant shares the code path") {
        for (int trial = 0; trial < 20; ++trial) {
            const Signal x = rng.unit_vector(10);
            const double top = s.rot.rho[0];
            const double r = top - rng.uniform(0.05, 0.5);
            const ExpansionReport report = truncate_by_threshold(s.rot, x, r);
            CHECK(report.actual_error_sq <= report.bound + 1e-9);
        }
    }
}

TEST_CASE("interval truncation") {
    Rng rng(31);
    const Setup s = make_setup(rng, 10);

    SUBCASE("eigenvector input: zero variance, zero bound, zero error") {
        const ExpansionReport report =
            truncate_by_interval(s.spectrum, s.spectrum.Psi.col(4), 0.05);
        CHECK(report.variance <= 1e-12);
        CHECK(report.bound <= 1e-12);
        CHECK(report.actual_error_sq <= 1e-12);
    }
    SUBCASE("two-eigenvector mixture with a wide interval keeps both") {
        const Signal x = (s.spectrum.Psi.col(0) + s.spectrum.Psi.col(1)) / std::sqrt(2.0);
        const double gap = s.spectrum.sigma[0] - s.spectrum.sigma[1];
        const ExpansionReport report = truncate_by_interval(s.spectrum, x, gap / 2.0 + 0.01);
        CHECK(report.actual_error_sq <= 1e-12);
    }
    SUBCASE("Chebyshev bound respected on an a-sweep") {
        for (int trial = 0; trial < 50; ++trial) {
            const Signal x = rng.unit_vector(10) * rng.uniform(0.2, 3.0);
            for (int j = 1; j <= 20; ++j) {
                const double a = 0.02 * j;
                const ExpansionReport report = truncate_by_interval(s.spectrum, x, a);
                CHECK(report.actual_error_sq <= report.bound + 1e-9);
                const ExpansionReport rr = truncate_by_interval(s.rot, x, a);
                CHECK(rr.actual_error_sq <= rr.bound + 1e-9);
            }
        }
    }
    SUBCASE("a <= 0 rejected") {
        CHECK_THROWS_AS(truncate_by_interval(s.spectrum, rng.unit_vector(10), 0.0),
                        validation_error);
    }
}

TEST_CASE("spectral distribution") {
    Rng rng(37);
    const Setup s = make_setup(rng, 9);

    SUBCASE("eigenvector gives a point mass") {
        const SpectralDistribution mu = spectral_distribution(s.spectrum, s.spectrum.Psi.col(2));
        CHECK(mu.mu[2] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mu.mu.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mu.input_was_normalized);
    }
    SUBCASE("uniform mixture of two eigenvectors") {
        const Signal x = (s.spectrum.Psi.col(1) + s.spectrum.Psi.col(5)) / std::sqrt(2.0);
        const SpectralDistribution mu = spectral_distribution(s.spectrum, x);
        CHECK(mu.mu[1] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(mu.mu[5] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("moments match the operator statistics") {
        for (int trial = 0; trial < 200; ++trial) {
            const Signal x = rng.unit_vector(9);
            const SpectralDistribution mu = spectral_distribution(s.spectrum, x);
            CHECK(mu.mu.minCoeff() >= 0.0);
            CHECK(mu.mu.sum() == doctest::Approx(1.0).epsilon(1e-10));
            const double mean = mu.mu.dot(s.spectrum.sigma);
            CHECK(std::abs(mean - s_mean(s.bundle, x)) <= 1e-10);
            const double variance =
                mu.mu.dot((s.spectrum.sigma.array() - mean).square().matrix());
            const auto [var_s, var_r] = variances(s.bundle, s.rot, x);
            CHECK(std::abs(variance - var_s) <= 1e-10);
        }
    }
    SUBCASE("unnormalized input is flagged and normalized") {
        const SpectralDistribution mu =
            spectral_distribution(s.spectrum, 3.0 * s.spectrum.Psi.col(1));
        CHECK_FALSE(mu.input_was_normalized);
        CHECK(mu.mu.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("zero signal rejected") {
        CHECK_THROWS_AS(spectral_distribution(s.spectrum, Signal::Zero(9)), validation_error);
    }
}

TEST_CASE("completeness: keeping everything reproduces the signal") {
    Rng rng(41);
    const Setup s = make_setup(rng, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const Signal x = rng.unit_vector(8) * rng.uniform(0.5, 2.0);
        const double below_min = s.spectrum.sigma[7] - 0.5;
        if (!(below_min < s.spectrum.sigma[0])) continue;
        const ExpansionReport report = truncate_by_threshold(s.spectrum, x, below_min);
        CHECK(static_cast<int>(report.kept.size()) == 8);
        CHECK((report.reconstruction - x).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(report.actual_error_sq <= 1e-10);
    }
}
