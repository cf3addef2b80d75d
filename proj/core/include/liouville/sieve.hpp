#pragma once

#include <cstdint>
#include <vector>

namespace liouville {

// lambda(n) = (-1)^Omega(n) for a single n, by trial division.
int lambda_of(uint64_t n);

// mu(n): 0 on non-squarefree n, otherwise lambda(n).
int mu_of(uint64_t n);

struct SieveSegment {
    uint64_t start = 1;                // first integer covered
    std::vector<int8_t> lambda;        // lambda[start + i]
    std::vector<int8_t> mu;            // mu[start + i]

    uint64_t length() const { return lambda.size(); }
};

// Segmented sieve for lambda/mu over [start, start + length). Base primes up
// to sqrt(max_n) are built once; segments are then independent, so callers
// may generate them from worker threads concurrently.
class SieveContext {
public:
    explicit SieveContext(uint64_t max_n, uint64_t max_segment_length = uint64_t{1} << 22);

    SieveSegment segment(uint64_t start, uint64_t length) const;

    uint64_t max_n() const { return max_n_; }
    uint64_t max_segment_length() const { return max_segment_length_; }
    const std::vector<uint32_t>& odd_base_primes() const { return odd_primes_; }

private:
    uint64_t max_n_;
    uint64_t max_segment_length_;
    std::vector<uint32_t> odd_primes_;   // odd primes <= sqrt(max_n)
    std::vector<uint64_t> inverses_;     // p^-1 mod 2^64, matching odd_primes_
};

struct MertensCheckResult {
    bool ok = true;
    uint64_t first_bad_x = 0;   // first x violating L(x) = sum_{d^2<=x} M(x/d^2)
    uint64_t first_bad_n = 0;   // first n violating lambda(n) = sum_{d^2|n} mu(n/d^2)
};

// Brute-force verification of the Mertens-function identities up to X.
MertensCheckResult mertens_identity_check(uint64_t x_limit);

}  // namespace liouville
