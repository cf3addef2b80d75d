#include "liouville/zero_locator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "liouville/parallel.hpp"
#include "liouville/zeta.hpp"

namespace liouville {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mean_gap(double t) { return kTwoPi / std::log(t / kTwoPi); }

double theta_prime(double t) {
    double t2 = t * t;
    return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t2) - 21.0 / (5760.0 * t2 * t2);
}

// Smooth zero count theta(t)/pi + 1; N(t) differs from it by S(t) = O(1).
double smooth_count(double t) { return hardy_theta(t) / kPi + 1.0; }

double smooth_count_inverse(double target) {
    double lo = 14.0, hi = 100.0;
    while (smooth_count(hi) < target) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
        double mid = 0.5 * (lo + hi);
        (smooth_count(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// B_{2k}/(2k)! for the fixed order-8 tail used by the block evaluator.
constexpr double kBof[] = {
    1.0 / 12.0,     -1.0 / 720.0,        1.0 / 30240.0,      -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0, 1.0 / 74724249600.0, -3617.0 / 10670622842880000.0,
};

// Euler-Maclaurin tail (boundary + correction terms) of zeta(s) cut at N.
cplx em_tail(cplx s, double big_n) {
    double ln_n = std::log(big_n);
    cplx n_pow_ms = std::exp(-s * ln_n);
    cplx out = big_n * n_pow_ms / (s - 1.0) + 0.5 * n_pow_ms;
    cplx poch(1.0, 0.0);
    double n_scale = 1.0 / big_n;
    int j = 0;
    for (int k = 1; k <= 8; ++k) {
        poch *= (s + static_cast<double>(j));
        ++j;
        if (k > 1) {
            poch *= (s + static_cast<double>(j));
            ++j;
        }
        out += kBof[k - 1] * poch * n_pow_ms * n_scale;
        n_scale /= big_n * big_n;
    }
    return out;
}

// Z(t) on the uniform grid t0 + m*h, m = 0..points-1, in one pass: the main
// sum uses a per-n geometric recurrence in m (one complex multiply per grid
// point instead of a fresh sin/cos).
std::vector<double> hardy_z_grid(double t0, double h, int points) {
    double t_max = t0 + h * (points - 1);
    int big_n = std::max(64, static_cast<int>(0.55 * t_max) + 1);
    std::vector<cplx> acc(points, cplx(0.0, 0.0));
    for (int n = 1; n < big_n; ++n) {
        double ln_n = std::log(static_cast<double>(n));
        double amp = 1.0 / std::sqrt(static_cast<double>(n));
        cplx base = amp * cplx(std::cos(t0 * ln_n), -std::sin(t0 * ln_n));
        cplx ratio(std::cos(h * ln_n), -std::sin(h * ln_n));
        for (int m = 0; m < points; ++m) {
            acc[m] += base;
            base *= ratio;
        }
    }
    std::vector<double> z(points);
    for (int m = 0; m < points; ++m) {
        double t = t0 + h * m;
        cplx zeta = acc[m] + em_tail(cplx(0.5, t), static_cast<double>(big_n));
        double th = hardy_theta(t);
        z[m] = std::cos(th) * zeta.real() - std::sin(th) * zeta.imag();
    }
    return z;
}

// Newton polish on Z with a bracket safeguard; [lo, hi] must straddle a sign
// change. Early iterations run with a short Euler-Maclaurin cut.
double polish_zero(double lo, double hi) {
    double zl = hardy_z(lo);
    for (int narrow = 0; narrow < 2; ++narrow) {
        const int pts = 9;
        double h = (hi - lo) / (pts - 1);
        std::vector<double> z = hardy_z_grid(lo, h, pts);
        z[0] = zl;
        for (int m = 0; m + 1 < pts; ++m) {
            if ((z[m] > 0.0) != (z[m + 1] > 0.0)) {
                lo = lo + h * m;
                hi = lo + h;
                zl = z[m];
                break;
            }
        }
    }
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 3; ++iter) {
        ZetaPairResult zp = zeta_and_prime_em(cplx(0.5, t));
        double th = hardy_theta(t);
        cplx phase(std::cos(th), std::sin(th));
        double z = (phase * zp.zeta).real();
        double zd = (cplx(0.0, 1.0) * phase * (theta_prime(t) * zp.zeta + zp.zeta_prime)).real();
        if (zd == 0.0) break;
        double step = z / zd;
        double next = t - step;
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);  // safeguard
        if (std::abs(next - t) < 1e-12 * std::max(1.0, t)) {
            t = next;
            break;
        }
        t = next;
    }
    return t;
}

struct Block {
    double t0 = 0.0;
    double t1 = 0.0;
    int level = 0;  // escalation level; step = base_step / 4^level
    std::vector<double> zeros;
};

void scan_block(Block& b, double step_fraction, int max_escalations) {
    double expected = smooth_count(b.t1) - smooth_count(b.t0);
    for (;; ++b.level) {
        double h = step_fraction * mean_gap(b.t1) / std::pow(4.0, b.level);
        int points = static_cast<int>(std::ceil((b.t1 - b.t0) / h)) + 1;
        h = (b.t1 - b.t0) / (points - 1);
        std::vector<double> z = hardy_z_grid(b.t0, h, points);
        b.zeros.clear();
        for (int m = 0; m + 1 < points; ++m) {
            if ((z[m] > 0.0) != (z[m + 1] > 0.0))
                b.zeros.push_back(polish_zero(b.t0 + h * m, b.t0 + h * (m + 1)));
        }
        if (static_cast<double>(b.zeros.size()) > expected - 1.75 || b.level >= max_escalations)
            break;
    }
}

}  // namespace

std::vector<double> locate_zeros(std::size_t count, const ZeroLocatorOptions& opts) {
    if (count == 0) return {};
    const double t_end = smooth_count_inverse(static_cast<double>(count) + 3.5);

    std::vector<Block> blocks;
    for (double t = 14.0; t < t_end;) {
        double width = 64.0 * mean_gap(std::max(t, 20.0));
        double t1 = std::min(t + width, t_end);
        if (t_end - t1 < 0.25 * width) t1 = t_end;  // avoid a sliver block
        blocks.push_back({t, t1, 0, {}});
        t = t1;
    }

    auto scan_all = [&](std::vector<std::size_t> which) {
        parallel_blocks(which.size(), opts.threads, [&](int, std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                scan_block(blocks[which[i]], opts.step_fraction, opts.max_escalations);
        });
    };
    std::vector<std::size_t> all(blocks.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    scan_all(all);

    // A missed close pair shifts theta(gamma_i)/pi + 1 - i by 2 from that
    // point on; a 32-zero window mean of the deviation separates that from
    // the O(1) oscillation of S(t). Every flagged window in a pass is
    // rescanned at the next escalation level, with a running offset so one
    // miss does not drown the detector for the rest of the list.
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::vector<double> zeros;
        for (const auto& b : blocks) zeros.insert(zeros.end(), b.zeros.begin(), b.zeros.end());

        const std::size_t window = 32;
        std::vector<std::pair<double, double>> ranges;
        if (zeros.size() >= window) {
            double acc = 0.0;
            double offset = 0.0;
            std::size_t win_count = 0;
            for (std::size_t i = 0; i < zeros.size(); ++i) {
                acc += smooth_count(zeros[i]) - static_cast<double>(i + 1) + 0.5 - offset;
                ++win_count;
                if (win_count > window) {
                    acc -= smooth_count(zeros[i - window]) - static_cast<double>(i - window + 1) +
                           0.5 - offset;
                    win_count = window;
                }
                if (win_count == window && std::abs(acc / window) > 1.0) {
                    ranges.emplace_back(zeros[i + 1 - window], zeros[i]);
                    offset += std::round(acc / window);
                    acc = 0.0;
                    win_count = 0;  // restart the window past the trigger
                }
            }
        }
        if (ranges.empty()) {
            if (zeros.size() < count)
                throw std::runtime_error("locate_zeros: scan found fewer zeros than requested");
            if (!std::is_sorted(zeros.begin(), zeros.end()))
                throw std::runtime_error("locate_zeros: stitched ordinates not increasing");
            zeros.resize(count);
            return zeros;
        }
        std::vector<std::size_t> suspects;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            bool hit = false;
            for (const auto& [lo, hi] : ranges)
                if (blocks[i].t0 <= hi + 1.0 && lo - 1.0 <= blocks[i].t1) hit = true;
            if (hit && blocks[i].level < opts.max_escalations + 2) {
                ++blocks[i].level;
                blocks[i].zeros.clear();
                suspects.push_back(i);
            }
        }
        if (opts.debug)
            std::fprintf(stderr, "locate_zeros: pass %d flagged %zu window(s), rescanning %zu block(s)\n",
                         attempt, ranges.size(), suspects.size());
        if (suspects.empty()) break;
        scan_all(suspects);
    }
    throw std::runtime_error("locate_zeros: count verification failed after rescans");
}

void write_zeros_file(const std::filesystem::path& path, const std::vector<double>& ordinates,
                      const std::string& comment) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open zeros file for writing: " + path.string());
    if (!comment.empty()) out << "# " << comment << "\n";
    char buf[64];
    for (double g : ordinates) {
        std::snprintf(buf, sizeof buf, "%.15f\n", g);
        out << buf;
    }
    if (!out) throw std::runtime_error("zeros file write failed: " + path.string());
}

}  // namespace liouville
