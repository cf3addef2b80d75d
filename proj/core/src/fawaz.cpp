#include "liouville/fawaz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liouville/dirichlet_c.hpp"
#include "liouville/errors.hpp"
#include "liouville/parallel.hpp"
#include "liouville/special_functions.hpp"

namespace liouville {

namespace {

// |C(y) + S(y) - 1| <= kCs1Bound / y for all y > 0 (the sup of y|C+S-1| is
// about 0.25; this is the slack constant the classical I(x) bound uses).
constexpr double kCs1Bound = 0.90031631615710606;  // 2 sqrt(2) / pi

double cs1(double y) {
    FresnelPair f = fresnel(y);
    return f.c + f.s - 1.0;
}

}  // namespace

FawazSeries::FawazSeries(uint64_t n_terms) : n_terms_(n_terms) {
    if (n_terms < 1) throw std::invalid_argument("FawazSeries: n_terms must be >= 1");
    c_ = c_coefficients(n_terms);
}

double FawazSeries::value_with_cut(double x, uint64_t cut) const {
    if (!(x > 0.0)) throw std::domain_error("fawaz: x must be > 0");
    cut = std::min<uint64_t>(cut, n_terms_);
    const double rx = std::sqrt(x);
    KahanSum sum;
    for (uint64_t n = 1; n <= cut; ++n) {
        int32_t cn = c_[n];
        if (cn == 0) continue;
        sum.add(static_cast<double>(cn) / static_cast<double>(n) * cs1(rx * std::sqrt(static_cast<double>(n))));
    }
    return 1.0 + 2.0 * sum.value();
}

FawazResult FawazSeries::value(double x, double max_tail) const {
    if (!(x > 0.0)) throw std::domain_error("fawaz: x must be > 0");
    const double rx = std::sqrt(x);
    const uint64_t half = n_terms_ / 2;
    KahanSum sum;
    double at_half = 0.0;
    for (uint64_t n = 1; n <= n_terms_; ++n) {
        if (n == half + 1) at_half = sum.value();
        int32_t cn = c_[n];
        if (cn == 0) continue;
        sum.add(static_cast<double>(cn) / static_cast<double>(n) * cs1(rx * std::sqrt(static_cast<double>(n))));
    }
    FawazResult out;
    out.value = 1.0 + 2.0 * sum.value();
    double majorant = 2.0 * kCs1Bound / rx * c_tail_majorant(n_terms_, 1.5);
    double doubling = half > 0 ? 4.0 * std::abs(2.0 * (sum.value() - at_half)) : majorant;
    out.tail_estimate = std::min(majorant, doubling) + 1e-14;
    if (!(out.tail_estimate <= max_tail))
        throw AccuracyError("fawaz: series tail estimate " + std::to_string(out.tail_estimate) +
                            " exceeds " + std::to_string(max_tail));
    return out;
}

namespace {

// Adaptive Simpson on [a, b]; fn evaluations are the expensive part.
template <typename F>
double adaptive_simpson(const F& fn, double a, double b, double fa, double fm, double fb,
                        double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = fn(lm), frm = fn(rm);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(fn, a, m, fa, flm, fm, 0.5 * tol, depth - 1) +
           adaptive_simpson(fn, m, b, fm, frm, fb, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_panels(const F& fn, double a, double b, double panel_width, double tol) {
    int panels = std::max(1, static_cast<int>(std::ceil((b - a) / panel_width)));
    double h = (b - a) / panels;
    double total = 0.0;
    double fa = fn(a);
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h, hi = a + (i + 1) * h;
        double fm = fn(0.5 * (lo + hi));
        double fb = fn(hi);
        total += adaptive_simpson(fn, lo, hi, fa, fm, fb, tol / panels, 18);
        fa = fb;
    }
    return total;
}

constexpr double kSmallU = 0.02;
constexpr uint64_t kQuadCut = 30'000;  // series cut for quadrature integrand evals

// Power-law model of I(u) near u = 0 (I decays like u^{1/2 - eps}); feeds the
// [0, u0] mass of the I_alpha integral and its uncertainty.
struct SmallUFit {
    double amplitude = 0.0;  // signed
    double exponent = 0.5;
    double residual = 0.0;  // worst absolute misfit at the sample points
};

SmallUFit fit_small_u(const FawazSeries& series) {
    const double us[] = {0.02, 0.04, 0.08, 0.16, 0.32};
    double iv[5];
    for (int i = 0; i < 5; ++i) iv[i] = series.value_with_cut(us[i], series.n_terms());
    // log-log least squares on |I|
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 5; ++i) {
        double lx = std::log(us[i]), ly = std::log(std::max(1e-12, std::abs(iv[i])));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    SmallUFit fit;
    fit.exponent = (5 * sxy - sx * sy) / (5 * sxx - sx * sx);
    fit.exponent = std::clamp(fit.exponent, 0.05, 1.0);
    double amp = 0.0;
    for (int i = 0; i < 5; ++i) amp += iv[i] / std::pow(us[i], fit.exponent);
    fit.amplitude = amp / 5;
    for (int i = 0; i < 5; ++i)
        fit.residual = std::max(fit.residual,
                                std::abs(iv[i] - fit.amplitude * std::pow(us[i], fit.exponent)));
    return fit;
}

}  // namespace

FawazAlphaResult fawaz_i_alpha(const FawazSeries& series, double x, double alpha, double quad_tol) {
    if (!(x > 0.0)) throw std::domain_error("fawaz_i_alpha: x must be > 0");
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("fawaz_i_alpha: alpha must be in [0, 1/2)");
    if (alpha == 0.0) {
        FawazResult base = series.value(x, 1.0);
        return {base.value, base.tail_estimate};
    }

    FawazResult head = series.value(x, 1.0);
    FawazAlphaResult out;
    out.value = head.value * std::pow(x, -alpha);
    out.error_estimate = head.tail_estimate;

    SmallUFit fit = fit_small_u(series);
    double p = fit.exponent;
    if (x > kSmallU) {
        // alpha * int_{u0}^{x}
        auto integrand = [&](double u) {
            return series.value_with_cut(u, kQuadCut) * std::pow(u, -1.0 - alpha);
        };
        double quad = integrate_panels(integrand, kSmallU, x, 1.0, quad_tol);
        out.value += alpha * quad;
        out.error_estimate += quad_tol + alpha * 2e-4 * std::log(x / kSmallU);
        // modeled [0, u0] mass
        double mass = alpha * fit.amplitude * std::pow(kSmallU, p - alpha) / (p - alpha);
        out.value += mass;
        out.error_estimate += 0.25 * std::abs(mass) +
                              alpha * fit.residual * std::pow(kSmallU, -alpha) / std::max(0.1, p - alpha);
    } else {
        double mass = alpha * fit.amplitude * std::pow(x, p - alpha) / (p - alpha);
        out.value += mass;
        out.error_estimate += 0.5 * std::abs(mass);
    }
    return out;
}

FawazAlphaResult fawaz_i_alpha_constant(const FawazSeries& series, double alpha, double quad_tol) {
    if (!(alpha >= 0.0 && alpha < 0.5))
        throw std::domain_error("fawaz_i_alpha_constant: alpha must be in [0, 1/2)");
    if (alpha == 0.0) return {0.0, 0.0};  // literal alpha * integral

    const double u_far = 1200.0;
    auto integrand = [&](double u) {
        return series.value_with_cut(u, kQuadCut) * std::pow(u, -1.0 - alpha);
    };
    SmallUFit fit = fit_small_u(series);
    double p = fit.exponent;

    FawazAlphaResult out;
    out.value = alpha * integrate_panels(integrand, kSmallU, u_far, 1.0, quad_tol);
    out.error_estimate = quad_tol + alpha * 2e-4 * std::log(u_far / kSmallU);

    double mass = alpha * fit.amplitude * std::pow(kSmallU, p - alpha) / (p - alpha);
    out.value += mass;
    out.error_estimate += 0.25 * std::abs(mass) +
                          alpha * fit.residual * std::pow(kSmallU, -alpha) / std::max(0.1, p - alpha);

    // beyond u_far: I(u) = 1 + O(1/sqrt(u)); take the 1 exactly, bound the rest
    out.value += std::pow(u_far, -alpha);
    out.error_estimate += alpha * 6.43700967 * std::pow(u_far, -0.5 - alpha) / (0.5 + alpha);
    return out;
}

}  // namespace liouville
