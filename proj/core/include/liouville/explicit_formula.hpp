#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "liouville/summatory.hpp"
#include "liouville/zero_table.hpp"

namespace liouville {

// Complex zeta(2 rho) and zeta'(rho) per zero; the amplitude cache stores
// magnitudes only, so phases are recomputed on demand (and reused across
// models via this bank).
struct ZeroPhases {
    double max_gamma = 0.0;
    std::vector<std::complex<double>> zeta2rho;     // zeta(1 + 2i gamma_l)
    std::vector<std::complex<double>> zeta_prime;   // zeta'(1/2 + i gamma_l)
};

ZeroPhases compute_phases(const ZeroTable& table, double T, int threads = 0);

// Truncated model of L_alpha(x) / x^{1/2-alpha}:
//   E_alpha^(T)(x) = mu_alpha + 2 Re sum_{gamma_l < T} b_l x^{i gamma_l},
//   b_l = zeta(2 rho_l) / ((1/2 - alpha + i gamma_l) zeta'(rho_l)).
// For alpha = 1/2 the model is for L_{1/2}(x) itself:
//   log x/(2 zeta(1/2)) [+ constants behind a flag] + 2 Re sum (zeta(2rho)/zeta'(rho)) x^{i gamma}/(i gamma).
struct ExplicitModel {
    double alpha = 0.0;
    double truncation = 0.0;  // height T
    double mu = 0.0;          // 1/((1-2 alpha) zeta(1/2)) for alpha < 1/2
    double zeta_half = 0.0;
    bool half = false;             // alpha == 1/2 variant
    bool half_constants = false;   // include gamma0/zeta(1/2) - zeta'(1/2)/zeta(1/2)^2
    std::vector<double> gamma;
    std::vector<std::complex<double>> b;
};

ExplicitModel build_model(const ZeroTable& table, double alpha, double T,
                          const ZeroPhases* phases = nullptr, int threads = 0);
ExplicitModel build_model_half(const ZeroTable& table, double T, bool include_constants,
                               const ZeroPhases* phases = nullptr, int threads = 0);

double evaluate(const ExplicitModel& model, double x);
double evaluate_half(const ExplicitModel& model, double x);

// Same models evaluated at ln x; logarithmic windows long enough for
// variance checks overflow x itself as a double.
double evaluate_log(const ExplicitModel& model, double ln_x);
double evaluate_half_log(const ExplicitModel& model, double ln_x);

struct ResidualSample {
    double x = 0.0;
    double truth = 0.0;  // sieved L_alpha(x) / x^{1/2-alpha}
    double model = 0.0;
    double residual = 0.0;
};

struct ResidualReport {
    std::vector<ResidualSample> samples;
    double rms = 0.0;
    double error_budget = 0.0;  // (1 + x^{1-alpha} log x / T) / x^{1/2-alpha}, unit constant
};

// Compares the model against sieved truth at the series' recorded sample
// points inside [x_min, x_max].
ResidualReport residuals(const ExplicitModel& model, const SummatorySeries& series,
                         double x_min, double x_max);

// Log-spaced integer sample points for residual work.
std::vector<uint64_t> log_spaced_samples(uint64_t x_min, uint64_t x_max, int count);

}  // namespace liouville
