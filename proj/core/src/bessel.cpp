#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liouville/special_functions.hpp"

namespace liouville {

namespace {

// Hankel asymptotic: J0(x) = sqrt(2/(pi x)) (P cos(x - pi/4) - Q sin(x - pi/4)).
// Coefficients are (mu-1)(mu-9).../(k! 8^k) with mu = 0; the series is
// summed until the terms stop decreasing.
void hankel_pq(double x, double& p, double& q) {
    const double ix = 1.0 / (8.0 * x);
    const double ix2 = ix * ix;
    p = 1.0;
    q = -ix;
    double pterm = 1.0, qterm = -ix;
    double pprev = 1.0, qprev = std::abs(qterm);
    for (int k = 1; k <= 12; ++k) {
        double a = 4.0 * k - 3.0, b = 4.0 * k - 1.0;        // odd squares entering P
        pterm *= -(a * a) * (b * b) * ix2 / ((2.0 * k - 1.0) * 2.0 * k);
        double c = 4.0 * k - 1.0, d = 4.0 * k + 1.0;        // and Q
        qterm *= -(c * c) * (d * d) * ix2 / (2.0 * k * (2.0 * k + 1.0));
        if (std::abs(pterm) < pprev) {
            p += pterm;
            pprev = std::abs(pterm);
        }
        if (std::abs(qterm) < qprev) {
            q += qterm;
            qprev = std::abs(qterm);
        }
        if (pprev < 1e-17 && qprev < 1e-17) break;
    }
}

}  // namespace

double bessel_j0(double x) {
    x = std::fabs(x);
    if (x <= 12.0) {
        double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int j = 1; j <= 60; ++j) {
            term *= -q / (static_cast<double>(j) * j);
            sum += term;
            if (std::abs(term) < 1e-18) break;
        }
        return sum;
    }
    double p, q;
    hankel_pq(x, p, q);
    double chi = x - 0.25 * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_i0(double x) {
    x = std::fabs(x);
    if (x > 700.0) throw std::overflow_error("bessel_i0: argument beyond exp range");
    if (x <= 12.0) {
        double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int j = 1; j <= 80; ++j) {
            term *= q / (static_cast<double>(j) * j);
            sum += term;
            if (term < 1e-18 * sum) break;
        }
        return sum;
    }
    // I0(x) ~ e^x / sqrt(2 pi x) * sum ((2k-1)!!)^2 / (k! (8x)^k)
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k <= 20; ++k) {
        double odd = 2.0 * k - 1.0;
        term *= odd * odd * ix / static_cast<double>(k);
        if (term >= prev) break;  // asymptotic floor
        sum += term;
        prev = term;
        if (term < 1e-17) break;
    }
    return std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * sum;
}

}  // namespace liouville
