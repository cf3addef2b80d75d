#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace liouville {

struct SignChange {
    uint64_t n = 0;  // first index with the new state
    int from = 0;    // +1 if L was positive before n, -1 if nonpositive
    int to = 0;
};

struct CheckpointEntry {
    uint64_t n = 0;
    double value = 0.0;
};

struct SummatorySample {
    uint64_t n = 0;
    double value = 0.0;
};

struct SummatorySeries {
    double alpha = 0.0;
    uint64_t up_to = 0;

    double final_value = 0.0;
    std::optional<int64_t> final_value_int;  // alpha == 0 only (exact)

    std::vector<CheckpointEntry> checkpoints;
    std::vector<SignChange> sign_changes;
    std::vector<SummatorySample> samples;

    uint64_t min_n = 1;
    double min_value = 0.0;
    uint64_t max_n = 1;
    double max_value = 0.0;

    // integral over [1, up_to] of 1{L_alpha(x) <= 0} dx/x, exact on the
    // piecewise-constant integrand (zero counts as nonpositive).
    double log_measure_nonpos = 0.0;

    // max over n >= window_from (ScanConfig::window_from), if requested
    uint64_t window_from = 0;
    double window_max_value = 0.0;
    uint64_t window_max_n = 0;
};

struct ScanConfig {
    std::vector<double> alphas;          // each in [0, 1/2]
    uint64_t x_max = 0;
    uint64_t checkpoint_stride = 1'000'000;
    std::vector<uint64_t> sample_points; // sorted; L_alpha recorded at each
    std::vector<uint64_t> window_from;   // per alpha; track max L over n >= this (0 = off)
    int threads = 0;                     // 0 = hardware concurrency
    uint32_t segment_length = uint32_t{1} << 20;

    // Resume support: continue an interrupted scan from n = resume_n with the
    // given partial sums (one per alpha). Sign log, extrema and log-measure
    // then cover [resume_n, x_max] only.
    uint64_t resume_n = 0;
    std::vector<double> resume_values;
};

// Streams L_alpha(n) = sum_{k<=n} lambda(k)/k^alpha for every requested alpha
// in a single sieve pass. Segment generation is parallel; the reduction is
// sequential in n with a fixed order, so results do not depend on the thread
// count (bit-identical for every alpha).
std::vector<SummatorySeries> scan_summatory(const ScanConfig& config);

// Single-alpha convenience wrapper.
SummatorySeries summatory(double alpha, uint64_t x_max, uint64_t checkpoint_stride = 1'000'000,
                          int threads = 0);

// (1/log X) * integral_1^X 1{L_alpha(x) <= 0} dx/x.
double empirical_log_density(const SummatorySeries& series);
double empirical_log_density(double alpha, uint64_t x_max, int threads = 0);

struct AndersonStarkSample {
    uint64_t x0 = 0;
    double l_value = 0.0;
    double i_value = 0.0;
    double functional = 0.0;  // (L(x0) - I(x0)) / sqrt(x0)
};

AndersonStarkSample anderson_stark(uint64_t x0, double l_value, double i_value);

}  // namespace liouville
