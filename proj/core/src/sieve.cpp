#include "liouville/sieve.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace liouville {

namespace {

// Inverse of odd p modulo 2^64 (Newton iteration). Multiplying by it divides
// exactly whenever the dividend is a multiple of p.
uint64_t odd_inverse(uint64_t p) {
    uint64_t inv = p;  // correct to 3 bits
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    return inv;
}

std::vector<uint32_t> odd_primes_up_to(uint64_t limit) {
    std::vector<uint32_t> primes;
    if (limit < 3) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (uint64_t i = 3; i * i <= limit; i += 2) {
        if (!composite[i]) {
            for (uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = true;
        }
    }
    for (uint64_t i = 3; i <= limit; i += 2) {
        if (!composite[i]) primes.push_back(static_cast<uint32_t>(i));
    }
    return primes;
}

}  // namespace

int lambda_of(uint64_t n) {
    if (n == 0) throw std::invalid_argument("lambda_of: n must be >= 1");
    int omega = std::countr_zero(n);
    n >>= omega;
    for (uint64_t p = 3; p * p <= n; p += 2) {
        while (n % p == 0) {
            n /= p;
            ++omega;
        }
    }
    if (n > 1) ++omega;
    return (omega & 1) ? -1 : 1;
}

int mu_of(uint64_t n) {
    if (n == 0) throw std::invalid_argument("mu_of: n must be >= 1");
    int omega = 0;
    if (n % 2 == 0) {
        n /= 2;
        if (n % 2 == 0) return 0;
        ++omega;
    }
    for (uint64_t p = 3; p * p <= n; p += 2) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++omega;
        }
    }
    if (n > 1) ++omega;
    return (omega & 1) ? -1 : 1;
}

SieveContext::SieveContext(uint64_t max_n, uint64_t max_segment_length)
    : max_n_(max_n), max_segment_length_(max_segment_length) {
    if (max_n < 1) throw std::invalid_argument("SieveContext: max_n must be >= 1");
    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(max_n)));
    while (root * root > max_n) --root;
    while ((root + 1) * (root + 1) <= max_n) ++root;
    odd_primes_ = odd_primes_up_to(root);
    inverses_.reserve(odd_primes_.size());
    for (uint32_t p : odd_primes_) inverses_.push_back(odd_inverse(p));
}

SieveSegment SieveContext::segment(uint64_t start, uint64_t length) const {
    if (start < 1) throw std::invalid_argument("segment: start must be >= 1");
    if (length == 0) throw std::invalid_argument("segment: length must be >= 1");
    if (length > max_segment_length_)
        throw std::length_error("segment: length " + std::to_string(length) +
                                " exceeds segment budget " + std::to_string(max_segment_length_));
    if (start > max_n_ || start + length - 1 > max_n_)
        throw std::out_of_range("segment: range exceeds context max_n");

    const uint64_t end = start + length;  // exclusive

    // rem[i] = (start+i) with all sieved prime powers divided out;
    // omega[i] = number of prime factors removed so far (with multiplicity).
    static thread_local std::vector<uint64_t> rem;
    static thread_local std::vector<uint8_t> omega;
    static thread_local std::vector<uint8_t> squarefull;
    rem.resize(length);
    omega.assign(length, 0);
    squarefull.assign(length, 0);

    for (uint64_t i = 0; i < length; ++i) {
        uint64_t n = start + i;
        int tz = std::countr_zero(n);
        rem[i] = n >> tz;
        omega[i] = static_cast<uint8_t>(tz);
        squarefull[i] = tz >= 2;
    }

    const uint64_t last = end - 1;
    for (std::size_t pi = 0; pi < odd_primes_.size(); ++pi) {
        const uint64_t p = odd_primes_[pi];
        if (p * p > last && p > last) break;
        const uint64_t inv = inverses_[pi];
        uint64_t q = p;
        int level = 1;
        while (q <= last) {
            uint64_t m = ((start + q - 1) / q) * q;
            for (; m < end; m += q) {
                uint64_t i = m - start;
                rem[i] *= inv;  // exact: q | m implies p | rem at this level
                ++omega[i];
                if (level == 2) squarefull[i] = 1;
            }
            if (q > last / p) break;
            q *= p;
            ++level;
        }
    }

    SieveSegment seg;
    seg.start = start;
    seg.lambda.resize(length);
    seg.mu.resize(length);
    for (uint64_t i = 0; i < length; ++i) {
        int om = omega[i] + (rem[i] > 1 ? 1 : 0);
        int8_t lam = (om & 1) ? int8_t{-1} : int8_t{1};
        seg.lambda[i] = lam;
        seg.mu[i] = squarefull[i] ? int8_t{0} : lam;
    }
    return seg;
}

MertensCheckResult mertens_identity_check(uint64_t x_limit) {
    if (x_limit < 1) throw std::invalid_argument("mertens_identity_check: X must be >= 1");
    if (x_limit > 2'000'000)
        throw std::invalid_argument("mertens_identity_check: oracle scale is X <= 2e6");

    SieveContext ctx(x_limit, x_limit);
    SieveSegment seg = ctx.segment(1, x_limit);

    std::vector<int64_t> mertens(x_limit + 1, 0);
    std::vector<int64_t> lsum(x_limit + 1, 0);
    for (uint64_t n = 1; n <= x_limit; ++n) {
        mertens[n] = mertens[n - 1] + seg.mu[n - 1];
        lsum[n] = lsum[n - 1] + seg.lambda[n - 1];
    }

    MertensCheckResult res;

    // lambda(n) = sum_{d^2 | n} mu(n / d^2), accumulated over all n at once.
    std::vector<int64_t> conv(x_limit + 1, 0);
    for (uint64_t d = 1; d * d <= x_limit; ++d) {
        uint64_t dd = d * d;
        for (uint64_t m = 1; m * dd <= x_limit; ++m) conv[m * dd] += seg.mu[m - 1];
    }
    for (uint64_t n = 1; n <= x_limit; ++n) {
        if (conv[n] != seg.lambda[n - 1]) {
            res.ok = false;
            res.first_bad_n = n;
            break;
        }
    }

    // L(x) = sum_{d^2 <= x} M(floor(x / d^2))
    for (uint64_t x = 1; x <= x_limit; ++x) {
        int64_t total = 0;
        for (uint64_t d = 1; d * d <= x; ++d) total += mertens[x / (d * d)];
        if (total != lsum[x]) {
            res.ok = false;
            if (res.first_bad_x == 0) res.first_bad_x = x;
            break;
        }
    }
    return res;
}

}  // namespace liouville
