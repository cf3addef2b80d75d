#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "liouville/distribution.hpp"
#include "liouville/errors.hpp"
#include "liouville/special_functions.hpp"
#include "liouville/zero_locator.hpp"
#include "liouville/zero_table.hpp"

using namespace liouville;

namespace {

const ZeroTable& shared_table() {
    static ZeroTable table = [] {
        ZeroTable t = ZeroTable::from_ordinates(locate_zeros(600));
        t.enrich();
        return t;
    }();
    return table;
}

const AmplitudeSet& ampl0() {
    static AmplitudeSet a = amplitudes(shared_table(), 0.0);
    return a;
}

const DistributionGrid& grid0() {
    static DistributionGrid g = invert(ampl0(), {}, {});
    return g;
}

}  // namespace

TEST_CASE("amplitude construction") {
    const auto& a = ampl0();
    REQUIRE(a.r.size() == 600);
    for (double r : a.r) CHECK(r > 0.0);
    CHECK(a.tail_variance >= 0.0);
    // r stays finite in the alpha -> 1/2 limit
    auto half = amplitudes(shared_table(), 0.5);
    for (std::size_t i = 0; i < half.r.size(); ++i) {
        CHECK(std::isfinite(half.r[i]));
        double gamma = half.gamma[i];
        const auto& rec = shared_table().records()[i];
        CHECK(half.r[i] ==
              doctest::Approx(2.0 * rec.zeta2rho / (gamma * rec.dzeta)).epsilon(1e-12));
    }
    // empty table
    auto none = amplitudes(ZeroTable::from_ordinates({}), 0.0);
    CHECK(none.r.empty());
    CHECK(none.tail_variance == 0.0);
    CHECK(variance(none, false) == 0.0);
}

TEST_CASE("variance partial sums are nondecreasing") {
    AmplitudeSet head = ampl0();
    double prev = 0.0;
    for (std::size_t cut : {10, 50, 200, 600}) {
        AmplitudeSet part = head;
        part.r.resize(cut);
        double v = variance(part, false);
        CHECK(v >= prev);
        prev = v;
    }
    // alpha = 0.49 variance is finite and of the same order as alpha = 0
    auto a49 = amplitudes(shared_table(), 0.49);
    double v49 = variance(a49, false);
    CHECK(v49 > 0.5 * variance(ampl0(), false));
    CHECK(v49 < 2.0 * variance(ampl0(), false));
}

TEST_CASE("transform basics") {
    CHECK(nu_hat(ampl0(), 0.0).real() == 1.0);
    CHECK(nu_hat(ampl0(), 0.0).imag() == 0.0);
    for (double xi : {0.3, 2.0, 17.0, 55.0}) {
        auto plus = nu_hat(ampl0(), xi);
        auto minus = nu_hat(ampl0(), -xi);
        CHECK(std::abs(minus - std::conj(plus)) < 1e-14);
        CHECK(std::abs(plus) <= 1.0 + 1e-12);
    }
}

TEST_CASE("transform respects the bessel product envelope") {
    const auto& a = ampl0();
    for (double xi : {1.0, 5.0, 20.0, 60.0}) {
        double envelope = 1.0;
        for (double r : a.r)
            envelope *= std::min(1.0, std::sqrt(3.0 / (4.0 * r * xi)));
        CHECK(std::abs(nu_hat(a, xi, false)) <= envelope + 1e-12);
    }
}

TEST_CASE("inversion invariants") {
    const auto& g = grid0();
    CHECK(std::fabs(g.grid_mass - 1.0) < 1e-6);
    CHECK(g.min_psi > -1e-6);
    CHECK(std::fabs(g.grid_mean - g.mu) < 1e-4);
    CHECK(std::fabs(g.grid_median - g.mu) < 2e-3);
    CHECK(std::fabs(g.delta_p - g.delta_p_gil_pelaez) < 1e-4);
    CHECK(g.delta_p > 0.959321);
    CHECK(g.delta_p < 1.0);
    // symmetry about mu
    const auto& x = g.x;
    std::size_t n = x.size();
    for (std::size_t i = 0; i < n / 4; ++i) {
        double left = g.psi[i];
        double right = g.psi[n - 1 - i];
        CHECK(std::fabs(left - right) < 1e-6);
    }
    // grid second moment matches the analytic variance within 1%
    double dx = x[1] - x[0];
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
        var += w * g.psi[i] * (x[i] - g.grid_mean) * (x[i] - g.grid_mean);
    }
    var *= dx;
    CHECK(var == doctest::Approx(g.sigma2_with_tail).epsilon(0.01));
}

TEST_CASE("inversion error paths") {
    AmplitudeSet few = ampl0();
    few.r.resize(2);  // product never reaches the cutoff threshold
    few.gamma.resize(2);
    few.tail_variance = 0.0;
    CHECK_THROWS_AS(invert(few, {}, {}), AccuracyError);
    CHECK_THROWS_AS(invert(AmplitudeSet{}, {}, {}), std::invalid_argument);
}

TEST_CASE("gaussian tail bound") {
    CHECK(gaussian_tail(-0.5, 0.1, -0.5) == 1.0);
    CHECK_THROWS_AS(gaussian_tail(-0.5, 0.1, -0.6), std::domain_error);
    double prev = 1.0;
    for (double v = -0.5; v < 2.0; v += 0.25) {
        double g = gaussian_tail(-0.5, 0.1, v);
        CHECK(g <= prev);
        prev = g;
    }
    // V = 0 with the paper's sigma0^2 reproduces the bias complement
    double g = gaussian_tail(-0.6847652, 0.073219, 0.0);
    CHECK(g == doctest::Approx(1.0 - 0.959321).epsilon(1e-4));
}

TEST_CASE("montgomery lower bound") {
    auto mb0 = montgomery_lower(ampl0(), 0);
    CHECK(mb0.v == ampl0().mu);
    CHECK(mb0.bound == doctest::Approx(std::pow(2.0, -40.0)).epsilon(1e-12));
    double prev = mb0.bound;
    for (std::size_t n : {1, 2, 3, 8}) {
        auto mb = montgomery_lower(ampl0(), n);
        CHECK(mb.bound <= prev);
        prev = mb.bound;
        CHECK(mb.v > ampl0().mu);
    }
    // bound <= inverted estimate at the same threshold
    for (std::size_t n : {1, 2, 3}) {
        auto mb = montgomery_lower(ampl0(), n);
        CHECK(mb.bound <= upper_tail_from_grid(grid0(), mb.v) + 1e-15);
    }
    CHECK_THROWS_AS(montgomery_lower(ampl0(), 600), std::invalid_argument);
}

TEST_CASE("tail sandwich at montgomery thresholds") {
    for (std::size_t n : {1, 2, 3}) {
        auto mb = montgomery_lower(ampl0(), n);
        double inverted = upper_tail_from_grid(grid0(), mb.v);
        double gaussian = gaussian_tail(ampl0().mu, variance(ampl0(), false), mb.v);
        CHECK(mb.bound <= inverted + 1e-15);
        CHECK(inverted <= gaussian * 1.05 + 1e-12);
    }
}

TEST_CASE("monte carlo matches the moments and the inversion") {
    McOptions opts;
    opts.draws = 1'500'000;
    opts.seed = 99;
    opts.threads = 2;
    McSummary mc = sample_x(ampl0(), opts);
    double sigma2 = variance(ampl0(), true);
    double se_mean = std::sqrt(sigma2 / double(opts.draws));
    CHECK(std::fabs(mc.mean - ampl0().mu) < 3.0 * se_mean);
    // Var of (X - mu)^2 is 2 sigma^4 for a gaussian-ish sum; allow 5x
    CHECK(std::fabs(mc.variance - sigma2) < 5.0 * sigma2 / std::sqrt(double(opts.draws)));
    double comb = 3.0 * std::sqrt(mc.p_nonpositive_stderr * mc.p_nonpositive_stderr +
                                  grid0().inversion_error * grid0().inversion_error);
    CHECK(std::fabs(mc.p_nonpositive - grid0().delta_p) <= comb);
    uint64_t total = 0;
    for (auto b : mc.histogram) total += b;
    CHECK(total == opts.draws);
}

TEST_CASE("monte carlo is reproducible and thread-count independent") {
    McOptions a{.draws = 200'000, .seed = 7, .exact_zeros = 128, .threads = 1};
    McOptions b{.draws = 200'000, .seed = 7, .exact_zeros = 128, .threads = 4};
    McSummary one = sample_x(ampl0(), a);
    McSummary four = sample_x(ampl0(), b);
    CHECK(one.p_nonpositive == four.p_nonpositive);  // integer counts
    CHECK(one.histogram == four.histogram);
    CHECK(std::fabs(one.mean - four.mean) < 1e-12);
    McSummary again = sample_x(ampl0(), a);
    CHECK(again.mean == one.mean);
    McOptions c{.draws = 200'000, .seed = 8, .exact_zeros = 128, .threads = 1};
    CHECK(sample_x(ampl0(), c).p_nonpositive != one.p_nonpositive);
}

TEST_CASE("alpha sweep diagnostics") {
    auto rows = alpha_sweep(shared_table(), {0.0, 0.1, 0.25, 0.4, 0.45});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].delta_p >= 0.5);
        CHECK(rows[i].delta_p <= 1.0);
        if (i > 0) CHECK(rows[i].delta_p >= rows[i - 1].delta_p - 1e-3);
    }
    CHECK(rows.back().gaussian_lower_bound > 0.9999);
    CHECK_THROWS_AS(alpha_sweep(shared_table(), {0.5}), std::domain_error);
}
