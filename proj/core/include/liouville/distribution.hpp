#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "liouville/zero_table.hpp"

namespace liouville {

// Per-zero amplitudes r_{alpha,gamma} = 2|zeta(2rho)| / (|rho - alpha| |zeta'(rho)|)
// of the random model X_alpha = mu_alpha + sum r cos(2 pi U). tail_variance
// estimates sum r^2 over zeros beyond the table from the ~c/T decay of the
// partial-sum increments.
struct AmplitudeSet {
    double alpha = 0.0;
    double mu = 0.0;                // 1/((1-2 alpha) zeta(1/2))
    std::vector<double> r;          // table order (increasing gamma)
    std::vector<double> gamma;
    double tail_variance = 0.0;     // estimated sum_{gamma > T} r^2
};

AmplitudeSet amplitudes(const ZeroTable& table, double alpha);

// sigma_alpha^2 = sum r^2 / 2 (the variance of sum r cos(2 pi U)).
double variance(const AmplitudeSet& ampl, bool include_tail = false);

// Fourier transform nu_hat(xi) = exp(-i mu xi) prod J0(r xi), with an
// optional Gaussian factor exp(-xi^2 tail_variance / 4) standing in for the
// zeros beyond the table.
std::complex<double> nu_hat(const AmplitudeSet& ampl, double xi, bool tail_factor = true);

struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    int points = 4096;  // 0 (with x_min == x_max) = auto around mu +- 8 sigma
};

struct DistributionGrid {
    double alpha = 0.0;
    double mu = 0.0;
    double sigma2 = 0.0;           // without tail correction
    double sigma2_with_tail = 0.0;
    std::vector<double> x;
    std::vector<double> psi;
    double delta_p = 0.0;           // nu((-inf, 0]) from the density grid
    double delta_p_gil_pelaez = 0.0;
    double cutoff_xi = 0.0;
    double grid_mass = 0.0;         // integral of psi over the grid
    double grid_mean = 0.0;
    double grid_median = 0.0;
    double min_psi = 0.0;
    double inversion_error = 0.0;   // internal consistency estimate
};

struct InvertOptions {
    bool tail_factor = true;
    double cutoff_threshold = 1e-12;  // |nu_hat| at the xi cutoff
    int threads = 0;
};

// Trapezoidal Fourier inversion of nu_hat to the density psi_alpha, plus a
// Gil-Pelaez evaluation of nu((-inf, 0]) as a sign-convention cross-check.
// Throws AccuracyError if |nu_hat| cannot reach the cutoff threshold or the
// density dips below -1e-6.
DistributionGrid invert(const AmplitudeSet& ampl, const GridSpec& grid = {},
                        const InvertOptions& opts = {});

// Gaussian upper bound nu([V, inf)) <= exp(-(V-mu)^2 / (2 sigma^2)), V >= mu.
double gaussian_tail(double mu, double sigma2, double v);

struct MontgomeryBound {
    double v = 0.0;      // mu + 2 sum_{k<=n} r_(k)  (r sorted nonincreasing)
    double bound = 0.0;  // 2^-40 exp(-100 (sum_{k<=n} r)^2 / sum_{k>n} r^2)
};

MontgomeryBound montgomery_lower(const AmplitudeSet& ampl, std::size_t n);

struct TailReport {
    double v = 0.0;
    double gaussian_upper = 0.0;
    double montgomery_lower = 0.0;
    double inverted_estimate = 0.0;
};

// nu([v, inf)) integrated from an inverted grid (clamped to [0, 1]).
double upper_tail_from_grid(const DistributionGrid& grid, double v);

struct McOptions {
    uint64_t draws = 1'000'000;
    uint64_t seed = 1;
    std::size_t exact_zeros = 256;  // cos terms sampled exactly; rest Gaussian
    int threads = 0;
    int histogram_bins = 64;
};

struct McSummary {
    uint64_t draws = 0;
    double mean = 0.0;
    double variance = 0.0;
    double p_nonpositive = 0.0;
    double p_nonpositive_stderr = 0.0;
    double hist_min = 0.0;
    double hist_max = 0.0;
    std::vector<uint64_t> histogram;
};

// Monte Carlo draws of X_alpha = mu + sum r cos(2 pi U) (+ Gaussian stand-in
// for amplitudes beyond exact_zeros and for tail_variance), using Philox
// counter streams: reproducible for a given seed at any thread count.
McSummary sample_x(const AmplitudeSet& ampl, const McOptions& opts);

struct SweepRow {
    double alpha = 0.0;
    double mu = 0.0;
    double sigma2 = 0.0;
    double delta_p = 0.0;
    double gaussian_lower_bound = 0.0;  // 1 - exp(-mu^2/(2 sigma^2))
};

std::vector<SweepRow> alpha_sweep(const ZeroTable& table, const std::vector<double>& alphas,
                                  const InvertOptions& opts = {});

}  // namespace liouville
