#pragma once

// Test-side oracles, independent of the library paths they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "liouville/zeta.hpp"

namespace oracles {

// prime-factor count by plain repeated division (checks the sieve)
inline int big_omega(uint64_t n) {
    int count = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    return count;
}

inline int lambda(uint64_t n) { return big_omega(n) % 2 ? -1 : 1; }

inline int mu(uint64_t n) {
    int omega = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++omega;
        }
    }
    if (n > 1) ++omega;
    return omega % 2 ? -1 : 1;
}

// direct weighted sum in long double, summed largest-n first
inline double summatory_direct(double alpha, uint64_t x) {
    long double acc = 0.0L;
    for (uint64_t n = x; n >= 1; --n) {
        long double term = std::pow(static_cast<long double>(n), -static_cast<long double>(alpha));
        acc += lambda(n) > 0 ? term : -term;
        if (n == 1) break;
    }
    return static_cast<double>(acc);
}

// generic adaptive Simpson
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
    // panels keep oscillatory integrands resolved before adapting
    int panels = std::max(8, static_cast<int>((b - a) * 4));
    double h = (b - a) / panels, total = 0.0, fa = f(a);
    for (int i = 0; i < panels; ++i) {
        double lo = a + i * h, hi = a + (i + 1) * h;
        double fb = f(hi);
        total += simpson_rec(f, lo, hi, fa, f(0.5 * (lo + hi)), fb, tol / panels, 24);
        fa = fb;
    }
    return total;
}

// zeta via the eta alternating series with Cohen-Rodriguez Villegas-Zagier
// acceleration; a fully different route from Euler-Maclaurin.
inline std::complex<double> zeta_alternating(std::complex<double> s, int n = 64) {
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    std::complex<double> eta = acc / d;
    return eta / (1.0 - std::exp((1.0 - s) * std::log(2.0)));
}

// real zeta on (0,1) u (1, inf), alternating series route
inline double zeta_real(double sigma) { return zeta_alternating({sigma, 0.0}, 96).real(); }

// contour-integral route for the inverse-Mellin function I(u), usable at
// small u where the Fresnel series converges too slowly to test against
inline double fawaz_contour(double u, double t_max = 600.0, double dt = 0.02) {
    const double sigma1 = 0.45;
    const double lu = std::log(u);
    auto g = [&](double t) {
        std::complex<double> s(sigma1, t);
        std::complex<double> num = liouville::zeta_em(2.0 * s).value;
        std::complex<double> den = s * liouville::zeta_em(s).value;
        std::complex<double> phase(std::cos(t * lu), std::sin(t * lu));
        return (num / den * phase).real();
    };
    // composite Simpson with fixed step
    int n = static_cast<int>(t_max / dt);
    if (n % 2) ++n;
    double h = t_max / n;
    double acc = g(1e-9) + g(t_max);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * g(i * h);
    acc *= h / 3.0;
    return std::pow(u, sigma1) / std::numbers::pi * acc;
}

// count critical-line zeros on (0, T) by a fine Hardy-Z sign scan
inline int count_zeros_scan(double t_max, double step = 0.02) {
    int count = 0;
    double prev = liouville::hardy_z(14.0);
    for (double t = 14.0 + step; t <= t_max; t += step) {
        double z = liouville::hardy_z(t);
        if ((z > 0.0) != (prev > 0.0)) ++count;
        prev = z;
    }
    return count;
}

// bisection root of Hardy Z on a bracket
inline double first_zero_bisect(double lo = 14.0, double hi = 15.0) {
    double zl = liouville::hardy_z(lo);
    for (int i = 0; i < 64; ++i) {
        double m = 0.5 * (lo + hi);
        double zm = liouville::hardy_z(m);
        if ((zm > 0.0) == (zl > 0.0)) {
            lo = m;
            zl = zm;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracles
