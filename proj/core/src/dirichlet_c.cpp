#include "liouville/dirichlet_c.hpp"

#include <cmath>
#include <stdexcept>

#include "liouville/zeta.hpp"

namespace liouville {

namespace {

std::vector<int8_t> mobius_up_to(uint64_t n) {
    std::vector<int8_t> mu(n + 1, 1);
    std::vector<bool> is_comp(n + 1, false);
    if (n >= 1) mu[0] = 0;
    for (uint64_t p = 2; p <= n; ++p) {
        if (is_comp[p]) continue;
        for (uint64_t m = p; m <= n; m += p) {
            if (m > p) is_comp[m] = true;
            mu[m] = static_cast<int8_t>(-mu[m]);
        }
        if (p <= n / p) {
            uint64_t pp = p * p;
            for (uint64_t m = pp; m <= n; m += pp) mu[m] = 0;
        }
    }
    return mu;
}

}  // namespace

std::vector<int32_t> c_coefficients(uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("c_coefficients: N must be >= 1");
    if (n_max > 10'000'000) throw std::invalid_argument("c_coefficients: N must be <= 1e7");
    std::vector<int8_t> mu = mobius_up_to(n_max);
    std::vector<int32_t> c(n_max + 1, 0);
    for (uint64_t d = 1; d * d <= n_max; ++d) {
        uint64_t dd = d * d;
        int32_t dv = static_cast<int32_t>(d);
        for (uint64_t m = 1; m * dd <= n_max; ++m) {
            int8_t mv = mu[m];
            if (mv != 0) c[m * dd] += mv > 0 ? dv : -dv;
        }
    }
    return c;
}

double c_tail_majorant(uint64_t n_cut, double sigma) {
    if (sigma < 1.5) throw std::invalid_argument("c_tail_majorant: sigma must be >= 3/2");
    if (n_cut < 1) n_cut = 1;
    const double n = static_cast<double>(n_cut);
    double total = 0.0;
    uint64_t b_cut = static_cast<uint64_t>(std::sqrt(n));
    // b small: squarefree part must exceed N / b^2
    for (uint64_t b = 1; b <= b_cut; ++b) {
        double m = n / (static_cast<double>(b) * b);
        if (m < 1.0) m = 1.0;
        double inner = std::pow(m, -sigma) + std::pow(m, 1.0 - sigma) / (sigma - 1.0);
        total += std::pow(static_cast<double>(b), 1.0 - 2.0 * sigma) * inner;
    }
    // b large: all squarefree parts contribute, bounded by zeta(sigma)
    double zeta_sigma = zeta_em({sigma, 0.0}).value.real();
    double bb = static_cast<double>(b_cut);
    total += zeta_sigma * (std::pow(bb, 2.0 - 2.0 * sigma) / (2.0 * sigma - 2.0) + std::pow(bb, 1.0 - 2.0 * sigma));
    return total;
}

}  // namespace liouville
