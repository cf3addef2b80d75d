#pragma once

#include <complex>

namespace liouville {

struct ZetaResult {
    std::complex<double> value;
    double error_estimate = 0.0;  // absolute truncation estimate
};

struct ZetaPairResult {
    std::complex<double> zeta;
    std::complex<double> zeta_prime;
    double error_estimate = 0.0;        // for zeta
    double prime_error_estimate = 0.0;  // for zeta'
};

// Euler-Maclaurin evaluation of zeta(s) for Re(s) >= 0.4, s != 1.
// terms == 0 picks max(64, ceil(0.55*|Im s|)); explicit values must satisfy
// terms >= ceil(|Im s|/pi) + 10. Throws std::domain_error at the pole / out of
// half-plane, AccuracyError if the truncation estimate exceeds 1e-8.
ZetaResult zeta_em(std::complex<double> s, int terms = 0, int bernoulli_order = 8);

// Derivative, with every Euler-Maclaurin term differentiated analytically.
ZetaResult zeta_prime_em(std::complex<double> s, int terms = 0, int bernoulli_order = 8);

// Shared-pass evaluation of both (the n^-s work dominates).
ZetaPairResult zeta_and_prime_em(std::complex<double> s, int terms = 0, int bernoulli_order = 8);

// Riemann-Siegel theta: argument of the phase factor making Z real.
// Stirling expansion, accurate to ~1e-10 for t >= 10.
double hardy_theta(double t);

// Hardy Z(t) = Re[e^{i theta(t)} zeta(1/2 + it)]; real zeros of Z on t > 0
// are the ordinates of the critical-line zeros.
double hardy_z(double t);

}  // namespace liouville
