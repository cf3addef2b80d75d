#pragma once

#include <array>
#include <cstdint>

namespace liouville {

// Philox4x32-10 counter-based generator (Salmon et al.). Stateless: each
// (key, counter) pair yields four independent 32-bit words, so parallel
// consumers can index the stream directly and results are reproducible
// across platforms and thread counts.
class Philox4x32 {
public:
    using Block = std::array<uint32_t, 4>;

    explicit Philox4x32(uint64_t seed) : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)} {}

    Block operator()(uint64_t counter_lo, uint64_t counter_hi = 0) const {
        Block ctr = {static_cast<uint32_t>(counter_lo), static_cast<uint32_t>(counter_lo >> 32),
                     static_cast<uint32_t>(counter_hi), static_cast<uint32_t>(counter_hi >> 32)};
        uint32_t k0 = key_[0], k1 = key_[1];
        for (int round = 0; round < 10; ++round) {
            ctr = one_round(ctr, k0, k1);
            k0 += 0x9E3779B9u;  // golden-ratio Weyl increments
            k1 += 0xBB67AE85u;
        }
        return ctr;
    }

    // Uniform double in [0,1) from one 32-bit lane; the +0.5 offset keeps the
    // lattice symmetric so E[cos(2*pi*U)] = 0 exactly.
    static double to_unit(uint32_t w) { return (static_cast<double>(w) + 0.5) * 0x1p-32; }

private:
    static Block one_round(const Block& ctr, uint32_t k0, uint32_t k1) {
        uint64_t p0 = static_cast<uint64_t>(0xD2511F53u) * ctr[0];
        uint64_t p1 = static_cast<uint64_t>(0xCD9E8D57u) * ctr[2];
        return {static_cast<uint32_t>(p1 >> 32) ^ ctr[1] ^ k0, static_cast<uint32_t>(p1),
                static_cast<uint32_t>(p0 >> 32) ^ ctr[3] ^ k1, static_cast<uint32_t>(p0)};
    }

    std::array<uint32_t, 2> key_;
};

}  // namespace liouville
