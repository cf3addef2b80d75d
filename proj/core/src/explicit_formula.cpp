#include "liouville/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liouville/parallel.hpp"
#include "liouville/zeta.hpp"

namespace liouville {

namespace {

using cplx = std::complex<double>;

double zeta_half_value() {
    static const double v = zeta_em(cplx(0.5, 0.0)).value.real();
    return v;
}

}  // namespace

ZeroPhases compute_phases(const ZeroTable& table, double T, int threads) {
    std::size_t count = table.count_below(T);
    ZeroPhases phases;
    phases.max_gamma = T;
    phases.zeta2rho.resize(count);
    phases.zeta_prime.resize(count);
    const auto& recs = table.records();
    parallel_blocks(count, threads, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double g = recs[i].gamma;
            phases.zeta2rho[i] = zeta_em(cplx(1.0, 2.0 * g)).value;
            phases.zeta_prime[i] = zeta_prime_em(cplx(0.5, g)).value;
        }
    });
    return phases;
}

ExplicitModel build_model(const ZeroTable& table, double alpha, double T, const ZeroPhases* phases,
                          int threads) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("build_model: alpha must be in [0, 1/2); use build_model_half at 1/2");
    if (T > table.max_gamma() + 1.0)
        throw std::out_of_range("build_model: T exceeds table range");

    ExplicitModel model;
    model.alpha = alpha;
    model.truncation = T;
    model.zeta_half = zeta_half_value();
    model.mu = 1.0 / ((1.0 - 2.0 * alpha) * model.zeta_half);

    std::size_t count = table.count_below(T);
    ZeroPhases local;
    if (phases == nullptr || phases->zeta2rho.size() < count) {
        local = compute_phases(table, T, threads);
        phases = &local;
    }
    model.gamma.resize(count);
    model.b.resize(count);
    const auto& recs = table.records();
    for (std::size_t i = 0; i < count; ++i) {
        double g = recs[i].gamma;
        model.gamma[i] = g;
        model.b[i] = phases->zeta2rho[i] / (cplx(0.5 - alpha, g) * phases->zeta_prime[i]);
    }
    return model;
}

ExplicitModel build_model_half(const ZeroTable& table, double T, bool include_constants,
                               const ZeroPhases* phases, int threads) {
    ExplicitModel model;
    model.alpha = 0.5;
    model.half = true;
    model.half_constants = include_constants;
    model.truncation = T;
    model.zeta_half = zeta_half_value();
    model.mu = 0.0;

    std::size_t count = table.count_below(T);
    ZeroPhases local;
    if (phases == nullptr || phases->zeta2rho.size() < count) {
        local = compute_phases(table, T, threads);
        phases = &local;
    }
    model.gamma.resize(count);
    model.b.resize(count);
    const auto& recs = table.records();
    for (std::size_t i = 0; i < count; ++i) {
        double g = recs[i].gamma;
        model.gamma[i] = g;
        // zeta(2 rho)/zeta'(rho) * 1/(i gamma)
        model.b[i] = phases->zeta2rho[i] / (phases->zeta_prime[i] * cplx(0.0, g));
    }
    return model;
}

double evaluate_log(const ExplicitModel& model, double ln_x) {
    if (model.half) throw std::logic_error("evaluate: model is the alpha = 1/2 variant");
    if (!(ln_x >= 0.0)) throw std::domain_error("evaluate: x must be >= 1");
    KahanSum sum;
    for (std::size_t i = 0; i < model.gamma.size(); ++i) {
        double ph = model.gamma[i] * ln_x;
        // Re(b * e^{i ph}); conjugate zeros pair up into 2*Re.
        sum.add(model.b[i].real() * std::cos(ph) - model.b[i].imag() * std::sin(ph));
    }
    return model.mu + 2.0 * sum.value();
}

double evaluate(const ExplicitModel& model, double x) {
    if (!(x >= 1.0)) throw std::domain_error("evaluate: x must be >= 1");
    return evaluate_log(model, std::log(x));
}

double evaluate_half_log(const ExplicitModel& model, double ln_x) {
    if (!model.half) throw std::logic_error("evaluate_half: model is an alpha < 1/2 variant");
    if (!(ln_x >= 0.0)) throw std::domain_error("evaluate_half: x must be >= 1");
    KahanSum sum;
    for (std::size_t i = 0; i < model.gamma.size(); ++i) {
        double ph = model.gamma[i] * ln_x;
        sum.add(model.b[i].real() * std::cos(ph) - model.b[i].imag() * std::sin(ph));
    }
    double value = ln_x / (2.0 * model.zeta_half) + 2.0 * sum.value();
    if (model.half_constants) {
        static const double zeta_prime_half = zeta_prime_em({0.5, 0.0}).value.real();
        value += std::numbers::egamma / model.zeta_half -
                 zeta_prime_half / (model.zeta_half * model.zeta_half);
    }
    return value;
}

double evaluate_half(const ExplicitModel& model, double x) {
    if (!(x >= 1.0)) throw std::domain_error("evaluate_half: x must be >= 1");
    return evaluate_half_log(model, std::log(x));
}

ResidualReport residuals(const ExplicitModel& model, const SummatorySeries& series, double x_min,
                         double x_max) {
    if (series.alpha != model.alpha)
        throw std::invalid_argument("residuals: series alpha does not match model");
    ResidualReport report;
    KahanSum sq;
    for (const auto& sample : series.samples) {
        double x = static_cast<double>(sample.n);
        if (x < x_min || x > x_max) continue;
        double scale = std::pow(x, 0.5 - model.alpha);
        double truth = model.half ? sample.value : sample.value / scale;
        double value = model.half ? evaluate_half(model, x) : evaluate(model, x);
        double res = truth - value;
        report.samples.push_back({x, truth, value, res});
        sq.add(res * res);
        if (model.truncation > 0.0) {
            double budget =
                (1.0 + std::pow(x, 1.0 - model.alpha) * std::log(x) / model.truncation) / scale;
            report.error_budget = std::max(report.error_budget, budget);
        } else {
            report.error_budget = std::numeric_limits<double>::infinity();
        }
    }
    if (report.samples.empty())
        throw std::invalid_argument("residuals: series has no samples in [x_min, x_max]");
    report.rms = std::sqrt(sq.value() / static_cast<double>(report.samples.size()));
    return report;
}

std::vector<uint64_t> log_spaced_samples(uint64_t x_min, uint64_t x_max, int count) {
    if (x_min < 1 || x_max < x_min || count < 1)
        throw std::invalid_argument("log_spaced_samples: bad range");
    std::vector<uint64_t> pts;
    pts.reserve(count);
    double la = std::log(static_cast<double>(x_min)), lb = std::log(static_cast<double>(x_max));
    for (int i = 0; i < count; ++i) {
        double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        uint64_t n = static_cast<uint64_t>(std::llround(std::exp(la + f * (lb - la))));
        n = std::clamp<uint64_t>(n, x_min, x_max);
        if (pts.empty() || n > pts.back()) pts.push_back(n);
    }
    return pts;
}

}  // namespace liouville
