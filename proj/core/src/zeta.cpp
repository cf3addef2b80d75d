#include "liouville/zeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

using cplx = std::complex<double>;

// B_{2k} / (2k)! for k = 1..13
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 155112100433309859840000.0,
    -236364091.0 / 1693824136731743669452800000.0,
    8553103.0 / 2322315553990336978830950400.0,
};
constexpr int kMaxBernoulliOrder = static_cast<int>(std::size(kBernoulliOverFactorial)) - 1;

// 0.75|t| keeps the order-8 truncation estimate (including the derivative's
// log N factor) below ~1e-9 through |t| = 1.5e5, at a third of the cost of
// the conservative 2|t| cut.
int auto_terms(double abs_t) {
    double n = 0.75 * abs_t;
    return n < 64.0 ? 64 : static_cast<int>(n) + 1;
}

void check_preconditions(cplx s, int& terms, int bernoulli_order) {
    if (!(s.real() >= 0.4))
        throw std::domain_error("zeta_em: Re(s) must be >= 0.4");
    if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
        throw std::domain_error("zeta_em: pole at s = 1");
    if (bernoulli_order < 1 || bernoulli_order > kMaxBernoulliOrder)
        throw std::invalid_argument("zeta_em: bernoulli_order out of range");
    double abs_t = std::abs(s.imag());
    if (terms <= 0) {
        terms = auto_terms(abs_t);
    } else {
        int min_terms = static_cast<int>(std::ceil(abs_t / std::numbers::pi)) + 10;
        if (terms < min_terms)
            throw std::invalid_argument("zeta_em: terms below ceil(|Im s|/pi) + 10");
    }
}

struct EmCore {
    cplx zeta;
    cplx zeta_prime;
    double err;
    double err_prime;
};

EmCore em_core(cplx s, int terms, int order, bool want_prime) {
    const int n_cut = terms;
    const double sigma = s.real();
    const double t = s.imag();

    // sum_{n=1}^{N-1} n^-s  (and -log n * n^-s for the derivative)
    cplx partial(0.0, 0.0), partial_d(0.0, 0.0);
    for (int n = 1; n < n_cut; ++n) {
        double ln_n = std::log(static_cast<double>(n));
        double mag = std::exp(-sigma * ln_n);
        double ph = -t * ln_n;
        cplx nms(mag * std::cos(ph), mag * std::sin(ph));
        partial += nms;
        if (want_prime) partial_d += -ln_n * nms;
    }

    const double big_n = static_cast<double>(n_cut);
    const double ln_big_n = std::log(big_n);
    cplx n_pow_ms = std::exp(-s * ln_big_n);  // N^-s
    cplx sm1 = s - 1.0;

    cplx tail = big_n * n_pow_ms / sm1 + 0.5 * n_pow_ms;
    cplx tail_d(0.0, 0.0);
    if (want_prime)
        tail_d = big_n * n_pow_ms * (-ln_big_n / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * ln_big_n * n_pow_ms;

    // Correction terms C_k * s(s+1)...(s+2k-2) * N^{1-s-2k}
    cplx poch(1.0, 0.0);        // running pochhammer, starts at k=1 with factor s
    cplx harm(0.0, 0.0);        // sum 1/(s+j) over the factors of poch
    double n_scale = 1.0 / big_n;  // N^{1-2k} relative to N^-s, starts at N^-1
    cplx corr(0.0, 0.0), corr_d(0.0, 0.0);
    int j = 0;  // next factor is (s + j)
    for (int k = 1; k <= order; ++k) {
        poch *= (s + static_cast<double>(j));
        harm += 1.0 / (s + static_cast<double>(j));
        ++j;
        if (k > 1) {
            poch *= (s + static_cast<double>(j));
            harm += 1.0 / (s + static_cast<double>(j));
            ++j;
        }
        // after this, poch = s(s+1)...(s+2k-2), j = 2k-1
        cplx term = kBernoulliOverFactorial[k - 1] * poch * n_pow_ms * n_scale;
        corr += term;
        if (want_prime) corr_d += term * (harm - ln_big_n);
        n_scale /= big_n * big_n;
        if (k == order) break;
    }
    // poch currently has 2*order-1 factors; extend to 2*order+1 for the bound.
    cplx poch_next = poch * (s + static_cast<double>(j)) * (s + static_cast<double>(j + 1));
    cplx harm_next = harm + 1.0 / (s + static_cast<double>(j)) + 1.0 / (s + static_cast<double>(j + 1));
    double next_mag =
        std::abs(kBernoulliOverFactorial[order]) * std::abs(poch_next) * std::abs(n_pow_ms) * n_scale;
    double stretch = std::abs(s + static_cast<double>(2 * order + 1)) / (sigma + 2 * order + 1);

    EmCore out;
    out.zeta = partial + tail + corr;
    out.err = next_mag * stretch;
    if (want_prime) {
        out.zeta_prime = partial_d + tail_d + corr_d;
        out.err_prime = next_mag * (std::abs(harm_next) + ln_big_n) * stretch;
    } else {
        out.zeta_prime = cplx(0.0, 0.0);
        out.err_prime = 0.0;
    }
    return out;
}

void gate(double err, const char* what) {
    if (!(err <= 1e-8))
        throw AccuracyError(std::string(what) + ": truncation estimate exceeds 1e-8");
}

}  // namespace

ZetaResult zeta_em(cplx s, int terms, int bernoulli_order) {
    check_preconditions(s, terms, bernoulli_order);
    EmCore core = em_core(s, terms, bernoulli_order, false);
    gate(core.err, "zeta_em");
    return {core.zeta, core.err};
}

ZetaResult zeta_prime_em(cplx s, int terms, int bernoulli_order) {
    check_preconditions(s, terms, bernoulli_order);
    EmCore core = em_core(s, terms, bernoulli_order, true);
    gate(core.err_prime, "zeta_prime_em");
    return {core.zeta_prime, core.err_prime};
}

ZetaPairResult zeta_and_prime_em(cplx s, int terms, int bernoulli_order) {
    check_preconditions(s, terms, bernoulli_order);
    EmCore core = em_core(s, terms, bernoulli_order, true);
    gate(core.err, "zeta_em");
    gate(core.err_prime, "zeta_prime_em");
    return {core.zeta, core.zeta_prime, core.err, core.err_prime};
}

double hardy_theta(double t) {
    if (!(t > 0.0)) throw std::domain_error("hardy_theta: t must be positive");
    const double u = t / (2.0 * std::numbers::pi);
    double th = 0.5 * t * std::log(u) - 0.5 * t - std::numbers::pi / 8.0;
    const double t2 = t * t;
    th += 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2);
    return th;
}

double hardy_z(double t) {
    ZetaResult z = zeta_em(cplx(0.5, t));
    double th = hardy_theta(t);
    return std::cos(th) * z.value.real() - std::sin(th) * z.value.imag();
}

}  // namespace liouville
