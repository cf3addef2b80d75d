#pragma once

namespace liouville {

// Bessel function of the first kind of order zero. Power series for
// |x| <= 12, Hankel asymptotic expansion beyond.
double bessel_j0(double x);

// Modified Bessel function of order zero; throws std::overflow_error once
// e^x leaves double range (|x| > 700).
double bessel_i0(double x);

struct FresnelPair {
    double c = 0.0;
    double s = 0.0;
};

// Fresnel integrals C(x) = int_0^x cos(pi t^2/2) dt and S likewise, x >= 0.
// Extended-precision Taylor series below x = 5, auxiliary-function asymptotic
// expansion above; both branches stay within ~1e-12 absolute.
FresnelPair fresnel(double x);

}  // namespace liouville
