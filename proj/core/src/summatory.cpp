#include "liouville/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include "liouville/parallel.hpp"
#include "liouville/sieve.hpp"

namespace liouville {

namespace {

struct SegmentTerms {
    uint64_t start = 0;
    uint64_t length = 0;
    std::vector<int8_t> lambda;
    // powers[a][i] = (start+i)^(-alpha_a); empty for alpha == 0
    std::vector<std::vector<double>> powers;
};

SegmentTerms make_terms(const SieveContext& ctx, uint64_t start, uint64_t length,
                        const std::vector<double>& alphas) {
    SegmentTerms out;
    out.start = start;
    out.length = length;
    SieveSegment seg = ctx.segment(start, length);
    out.lambda = std::move(seg.lambda);
    out.powers.resize(alphas.size());
    for (std::size_t a = 0; a < alphas.size(); ++a) {
        if (alphas[a] == 0.0) continue;
        out.powers[a].resize(length);
    }
    for (uint64_t i = 0; i < length; ++i) {
        double ln_n = std::log(static_cast<double>(start + i));
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            if (alphas[a] == 0.0) continue;
            out.powers[a][i] = std::exp(-alphas[a] * ln_n);
        }
    }
    return out;
}

struct AlphaState {
    double alpha = 0.0;
    KahanSum sum;
    int64_t isum = 0;          // alpha == 0
    bool positive = true;      // state of L_alpha at the last processed n
    uint64_t run_start = 1;    // start of the current nonpositive run
    SummatorySeries series;

    double current() const { return alpha == 0.0 ? static_cast<double>(isum) : sum.value(); }
};

}  // namespace

std::vector<SummatorySeries> scan_summatory(const ScanConfig& config) {
    if (config.alphas.empty()) throw std::invalid_argument("scan_summatory: no alphas given");
    for (double a : config.alphas) {
        if (!(a >= 0.0 && a <= 0.5)) throw std::invalid_argument("scan_summatory: alpha must be in [0, 1/2]");
    }
    if (config.x_max < 1) throw std::invalid_argument("scan_summatory: x_max must be >= 1");
    if (config.resume_n > 0 && config.resume_values.size() != config.alphas.size())
        throw std::invalid_argument("scan_summatory: resume_values must match alphas");
    if (!std::is_sorted(config.sample_points.begin(), config.sample_points.end()))
        throw std::invalid_argument("scan_summatory: sample_points must be sorted");
    if (!config.window_from.empty() && config.window_from.size() != config.alphas.size())
        throw std::invalid_argument("scan_summatory: window_from must match alphas");

    const uint64_t seg_len = std::max<uint32_t>(config.segment_length, 1024);
    SieveContext ctx(config.x_max, seg_len);
    const int threads = resolve_threads(config.threads);

    std::vector<AlphaState> states(config.alphas.size());
    uint64_t first_n = 1;
    for (std::size_t a = 0; a < states.size(); ++a) {
        auto& st = states[a];
        st.alpha = config.alphas[a];
        st.series.alpha = st.alpha;
        st.series.up_to = config.x_max;
        if (!config.window_from.empty()) st.series.window_from = config.window_from[a];
        if (config.resume_n > 0) {
            first_n = config.resume_n + 1;
            double v = config.resume_values[a];
            if (st.alpha == 0.0) st.isum = static_cast<int64_t>(std::llround(v));
            st.sum.add(v);
            st.positive = v > 0.0;
            st.run_start = st.positive ? 0 : config.resume_n;
            st.series.min_n = st.series.max_n = config.resume_n;
            st.series.min_value = st.series.max_value = v;
        } else {
            // L_alpha(1) = 1 for every alpha; state starts positive at n = 1.
            st.run_start = 0;
        }
    }

    std::size_t sample_cursor = 0;
    while (sample_cursor < config.sample_points.size() && config.sample_points[sample_cursor] < first_n)
        ++sample_cursor;

    auto close_runs_and_finalize = [&](uint64_t end_n) {
        for (auto& st : states) {
            if (!st.positive && st.run_start > 0 && end_n > st.run_start)
                st.series.log_measure_nonpos +=
                    std::log(static_cast<double>(end_n) / static_cast<double>(st.run_start));
            st.series.final_value = st.current();
            if (st.alpha == 0.0) st.series.final_value_int = st.isum;
        }
    };

    // Segment producers run ahead of the in-order reducer.
    const uint64_t total = config.x_max - first_n + 1;
    const uint64_t n_segments = (total + seg_len - 1) / seg_len;
    const std::size_t window = static_cast<std::size_t>(std::max(1, threads));
    std::vector<std::future<SegmentTerms>> inflight;
    inflight.reserve(window);
    uint64_t next_submit = 0;

    auto submit = [&](uint64_t seg_idx) {
        uint64_t start = first_n + seg_idx * seg_len;
        uint64_t len = std::min<uint64_t>(seg_len, config.x_max - start + 1);
        inflight.push_back(std::async(std::launch::async, [&ctx, start, len, &config] {
            return make_terms(ctx, start, len, config.alphas);
        }));
    };

    for (; next_submit < std::min<uint64_t>(n_segments, window); ++next_submit) submit(next_submit);

    for (uint64_t seg_idx = 0; seg_idx < n_segments; ++seg_idx) {
        SegmentTerms terms = inflight[seg_idx % window].get();
        inflight[seg_idx % window] = std::future<SegmentTerms>();
        if (next_submit < n_segments) {
            uint64_t start = first_n + next_submit * seg_len;
            uint64_t len = std::min<uint64_t>(seg_len, config.x_max - start + 1);
            inflight[seg_idx % window] = std::async(std::launch::async, [&ctx, start, len, &config] {
                return make_terms(ctx, start, len, config.alphas);
            });
            ++next_submit;
        }

        for (uint64_t i = 0; i < terms.length; ++i) {
            const uint64_t n = terms.start + i;
            const int lam = terms.lambda[i];
            for (std::size_t a = 0; a < states.size(); ++a) {
                auto& st = states[a];
                double value;
                if (st.alpha == 0.0) {
                    st.isum += lam;
                    value = static_cast<double>(st.isum);
                } else {
                    st.sum.add(lam > 0 ? terms.powers[a][i] : -terms.powers[a][i]);
                    value = st.sum.value();
                }

                bool pos = value > 0.0;
                if (n == 1) {
                    st.positive = pos;
                    if (!pos) st.run_start = 1;
                } else if (pos != st.positive) {
                    st.series.sign_changes.push_back({n, st.positive ? 1 : -1, pos ? 1 : -1});
                    if (pos) {
                        // close a nonpositive run [run_start, n)
                        st.series.log_measure_nonpos +=
                            std::log(static_cast<double>(n) / static_cast<double>(st.run_start));
                        st.run_start = 0;
                    } else {
                        st.run_start = n;
                    }
                    st.positive = pos;
                }

                if (n == 1 || value < st.series.min_value) {
                    st.series.min_value = value;
                    st.series.min_n = n;
                }
                if (n == 1 || value > st.series.max_value) {
                    st.series.max_value = value;
                    st.series.max_n = n;
                }
                if (st.series.window_from > 0 && n >= st.series.window_from &&
                    (st.series.window_max_n == 0 || value > st.series.window_max_value)) {
                    st.series.window_max_value = value;
                    st.series.window_max_n = n;
                }
                if (config.checkpoint_stride > 0 &&
                    (n % config.checkpoint_stride == 0 || n == config.x_max))
                    st.series.checkpoints.push_back({n, value});
            }
            if (sample_cursor < config.sample_points.size() && config.sample_points[sample_cursor] == n) {
                for (auto& st : states) st.series.samples.push_back({n, st.current()});
                while (sample_cursor < config.sample_points.size() && config.sample_points[sample_cursor] == n)
                    ++sample_cursor;
            }
        }
    }

    close_runs_and_finalize(config.x_max);

    std::vector<SummatorySeries> out;
    out.reserve(states.size());
    for (auto& st : states) out.push_back(std::move(st.series));
    return out;
}

SummatorySeries summatory(double alpha, uint64_t x_max, uint64_t checkpoint_stride, int threads) {
    ScanConfig cfg;
    cfg.alphas = {alpha};
    cfg.x_max = x_max;
    cfg.checkpoint_stride = checkpoint_stride;
    cfg.threads = threads;
    return scan_summatory(cfg)[0];
}

double empirical_log_density(const SummatorySeries& series) {
    if (series.up_to < 2) throw std::invalid_argument("empirical_log_density: X must be >= 2");
    return series.log_measure_nonpos / std::log(static_cast<double>(series.up_to));
}

double empirical_log_density(double alpha, uint64_t x_max, int threads) {
    return empirical_log_density(summatory(alpha, x_max, 0, threads));
}

AndersonStarkSample anderson_stark(uint64_t x0, double l_value, double i_value) {
    if (x0 < 2) throw std::invalid_argument("anderson_stark: x0 must be >= 2");
    AndersonStarkSample s;
    s.x0 = x0;
    s.l_value = l_value;
    s.i_value = i_value;
    s.functional = (l_value - i_value) / std::sqrt(static_cast<double>(x0));
    return s;
}

}  // namespace liouville
