#pragma once

#include <cstdint>
#include <vector>

namespace liouville {

struct FawazResult {
    double value = 0.0;
    double tail_estimate = 0.0;  // truncation estimate for the series cut
};

struct FawazAlphaResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// I(x) = 1 + 2 sum_{n>=1} (c(n)/n) (C(sqrt(nx)) + S(sqrt(nx)) - 1), truncated
// at n_terms. The tail estimate is the smaller of the rigorous
// |c(n)|/n^{3/2} majorant and a doubling difference |I_N - I_{N/2}| scaled
// for slow decay; the majorant alone overstates the oscillatory tail by
// several orders of magnitude.
class FawazSeries {
public:
    explicit FawazSeries(uint64_t n_terms = 100'000);

    // Throws AccuracyError when the tail estimate exceeds max_tail.
    FawazResult value(double x, double max_tail = 1e-6) const;

    // Same sum with a reduced cut; used by the quadrature in fawaz_i_alpha
    // where per-point accuracy demands are milder.
    double value_with_cut(double x, uint64_t cut) const;

    uint64_t n_terms() const { return n_terms_; }

private:
    std::vector<int32_t> c_;
    uint64_t n_terms_;
};

// I_alpha(x) = I(x)/x^alpha + alpha * int_0^x I(u) u^{-1-alpha} du for
// alpha in [0, 1/2). The [0, u0] piece uses a power-law fit of I near zero
// (I(u) -> 0 like u^{1/2 - eps}); its modeled mass is folded into the error
// estimate. alpha == 0 returns I(x) exactly.
FawazAlphaResult fawaz_i_alpha(const FawazSeries& series, double x, double alpha,
                               double quad_tol = 1e-6);

// alpha * int_0^infty I(u) u^{-1-alpha} du, the limit of I_alpha(x).
// Returns 0 at alpha == 0 (the prefactor annihilates the integral there).
FawazAlphaResult fawaz_i_alpha_constant(const FawazSeries& series, double alpha,
                                        double quad_tol = 1e-6);

}  // namespace liouville
