#include "liouville/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "liouville/errors.hpp"
#include "liouville/parallel.hpp"
#include "liouville/philox.hpp"
#include "liouville/special_functions.hpp"
#include "liouville/zeta.hpp"

namespace liouville {

namespace {

double zeta_half_value() {
    static const double v = zeta_em({0.5, 0.0}).value.real();
    return v;
}

// Suffix accelerators for the nu_hat product: beyond the cut index where
// r*xi < 0.05, log J0(r xi) = -r^2 xi^2/4 - r^4 xi^4/64 + O((r xi)^6), so two
// suffix sums replace tens of thousands of J0 factors.
struct Suffix {
    std::vector<double> r2;    // sum_{k >= l} r^2
    std::vector<double> r4;    // sum_{k >= l} r^4
    std::vector<double> rmax;  // max_{k >= l} r
};

Suffix make_suffix(const std::vector<double>& r) {
    Suffix s;
    std::size_t n = r.size();
    s.r2.assign(n + 1, 0.0);
    s.r4.assign(n + 1, 0.0);
    s.rmax.assign(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        s.r2[i] = s.r2[i + 1] + r[i] * r[i];
        s.r4[i] = s.r4[i + 1] + r[i] * r[i] * r[i] * r[i];
        s.rmax[i] = std::max(s.rmax[i + 1], r[i]);
    }
    return s;
}

double log_b_tail(const Suffix& s, std::size_t cut, double xi) {
    double xi2 = xi * xi;
    return -xi2 * s.r2[cut] / 4.0 - xi2 * xi2 * s.r4[cut] / 64.0;
}

// Even real part B(xi) of nu_hat (the Bessel product, optional Gaussian tail).
double b_product(const AmplitudeSet& ampl, const Suffix& s, double xi, bool tail_factor) {
    xi = std::fabs(xi);
    if (xi == 0.0) return 1.0;
    std::size_t n = ampl.r.size();
    std::size_t cut = 0;
    // first suffix where every r*xi < 0.05
    while (cut < n && s.rmax[cut] * xi >= 0.05) ++cut;
    double prod = 1.0;
    for (std::size_t l = 0; l < cut; ++l) prod *= bessel_j0(ampl.r[l] * xi);
    double log_tail = log_b_tail(s, cut, xi);
    if (tail_factor) log_tail -= xi * xi * ampl.tail_variance / 4.0;
    return prod * std::exp(log_tail);
}

}  // namespace

AmplitudeSet amplitudes(const ZeroTable& table, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 0.5))
        throw std::domain_error("amplitudes: alpha must be in [0, 1/2]");
    AmplitudeSet out;
    out.alpha = alpha;
    out.mu = alpha == 0.5 ? -std::numeric_limits<double>::infinity()
                          : 1.0 / ((1.0 - 2.0 * alpha) * zeta_half_value());
    const auto& recs = table.records();
    out.r.reserve(recs.size());
    out.gamma.reserve(recs.size());
    for (const auto& rec : recs) {
        if (!(rec.dzeta > 0.0) || !(rec.zeta2rho > 0.0))
            throw std::runtime_error("amplitudes: table not enriched");
        double mod = std::hypot(0.5 - alpha, rec.gamma);
        out.r.push_back(2.0 * rec.zeta2rho / (mod * rec.dzeta));
        out.gamma.push_back(rec.gamma);
    }

    // tail: sum_{gamma > T} r^2 behaves like c/T; least-squares c from the
    // increments over dyadic windows in the top quarter of the table.
    if (recs.size() >= 64) {
        double t_hi = out.gamma.back();
        double t_lo = t_hi / 4.0;
        const int windows = 8;
        double num = 0.0, den = 0.0;
        std::size_t idx = 0;
        while (idx < out.gamma.size() && out.gamma[idx] < t_lo) ++idx;
        for (int w = 0; w < windows; ++w) {
            double a = t_lo * std::pow(t_hi / t_lo, static_cast<double>(w) / windows);
            double b = t_lo * std::pow(t_hi / t_lo, static_cast<double>(w + 1) / windows);
            double inc = 0.0;
            while (idx < out.gamma.size() && out.gamma[idx] < b) {
                inc += out.r[idx] * out.r[idx];
                ++idx;
            }
            double pred = 1.0 / a - 1.0 / b;
            num += inc * pred;
            den += pred * pred;
        }
        double c = den > 0.0 ? num / den : 0.0;
        out.tail_variance = std::max(0.0, c / t_hi);
    }
    return out;
}

double variance(const AmplitudeSet& ampl, bool include_tail) {
    if (ampl.r.empty() && !include_tail) return 0.0;
    KahanSum sum;
    for (double r : ampl.r) sum.add(r * r);
    double total = sum.value() + (include_tail ? ampl.tail_variance : 0.0);
    return total / 2.0;
}

std::complex<double> nu_hat(const AmplitudeSet& ampl, double xi, bool tail_factor) {
    Suffix s = make_suffix(ampl.r);
    double b = b_product(ampl, s, xi, tail_factor);
    return b * std::complex<double>(std::cos(ampl.mu * xi), -std::sin(ampl.mu * xi));
}

DistributionGrid invert(const AmplitudeSet& ampl, const GridSpec& grid_spec,
                        const InvertOptions& opts) {
    if (ampl.r.empty()) throw std::invalid_argument("invert: empty amplitude set");
    DistributionGrid grid;
    grid.alpha = ampl.alpha;
    grid.mu = ampl.mu;
    grid.sigma2 = variance(ampl, false);
    grid.sigma2_with_tail = variance(ampl, true);

    double sigma = std::sqrt(grid.sigma2_with_tail);
    double x_min = grid_spec.x_min, x_max = grid_spec.x_max;
    int points = grid_spec.points > 1 ? grid_spec.points : 4096;
    if (!(x_max > x_min)) {
        x_min = ampl.mu - 8.0 * sigma;
        x_max = ampl.mu + 8.0 * sigma;
    }

    Suffix suffix = make_suffix(ampl.r);

    // adaptive cutoff: smallest xi with |B| persistently under the threshold
    double cutoff = 0.0;
    {
        int below = 0;
        for (double xi = 1.0; xi < 2e5; xi += 1.0) {
            if (std::fabs(b_product(ampl, suffix, xi, opts.tail_factor)) < opts.cutoff_threshold) {
                if (++below >= 3) {
                    cutoff = xi;
                    break;
                }
            } else {
                below = 0;
            }
        }
        if (cutoff == 0.0)
            throw AccuracyError("invert: |nu_hat| does not reach the cutoff threshold; need more zeros");
    }
    grid.cutoff_xi = cutoff;

    double extent = std::max(std::fabs(x_min - ampl.mu), std::fabs(x_max - ampl.mu));
    extent = std::max({extent, std::fabs(ampl.mu), 1.0});
    double dxi = std::numbers::pi / (4.0 * extent);
    int m_count = static_cast<int>(std::ceil(cutoff / dxi)) + 1;
    dxi = cutoff / (m_count - 1);

    std::vector<double> b(m_count);
    parallel_blocks(m_count, opts.threads, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t m = lo; m < hi; ++m)
            b[m] = b_product(ampl, suffix, dxi * static_cast<double>(m), opts.tail_factor);
    });

    grid.x.resize(points);
    grid.psi.resize(points);
    double dx = (x_max - x_min) / (points - 1);
    parallel_blocks(points, opts.threads, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double x = x_min + dx * static_cast<double>(i);
            double u = x - ampl.mu;
            // trapezoid of B(xi) cos(u xi) with an incremental rotation
            double cd = std::cos(u * dxi), sd = std::sin(u * dxi);
            double c = 1.0, sn = 0.0;
            KahanSum acc;
            acc.add(0.5 * b[0]);
            for (int m = 1; m < m_count; ++m) {
                double cn = c * cd - sn * sd;
                sn = sn * cd + c * sd;
                c = cn;
                acc.add((m + 1 == m_count ? 0.5 : 1.0) * b[m] * c);
            }
            grid.x[i] = x;
            grid.psi[i] = acc.value() * dxi / std::numbers::pi;
        }
    });

    // grid moments
    {
        KahanSum mass, first;
        for (int i = 0; i < points; ++i) {
            double w = (i == 0 || i + 1 == points) ? 0.5 : 1.0;
            mass.add(w * grid.psi[i]);
            first.add(w * grid.psi[i] * grid.x[i]);
        }
        grid.grid_mass = mass.value() * dx;
        grid.grid_mean = first.value() * dx / grid.grid_mass;
        double half = 0.5 * grid.grid_mass;
        double cum = 0.0;
        grid.grid_median = grid.x.back();
        for (int i = 0; i + 1 < points; ++i) {
            double cell = 0.5 * (grid.psi[i] + grid.psi[i + 1]) * dx;
            if (cum + cell >= half) {
                double f = cell > 0.0 ? (half - cum) / cell : 0.5;
                grid.grid_median = grid.x[i] + f * dx;
                break;
            }
            cum += cell;
        }
    }
    grid.min_psi = *std::min_element(grid.psi.begin(), grid.psi.end());
    if (grid.min_psi < -1e-6)
        throw AccuracyError("invert: density negativity failure (min psi < -1e-6)");

    // nu((-inf, 0]) from the grid, with the out-of-grid lower tail folded in
    {
        double below = 0.0;
        if (x_min <= 0.0) {
            below += std::max(0.0, 0.5 * (1.0 - grid.grid_mass));
            for (int i = 0; i + 1 < points; ++i) {
                double x0 = grid.x[i], x1 = grid.x[i + 1];
                if (x1 <= 0.0) {
                    below += 0.5 * (grid.psi[i] + grid.psi[i + 1]) * dx;
                } else if (x0 < 0.0) {
                    double f = -x0 / dx;
                    double psi0 = grid.psi[i];
                    double psi_at0 = grid.psi[i] + f * (grid.psi[i + 1] - grid.psi[i]);
                    below += 0.5 * (psi0 + psi_at0) * (-x0);
                    break;
                } else {
                    break;
                }
            }
        }
        grid.delta_p = std::clamp(below, 0.0, 1.0);
    }

    // Gil-Pelaez: F(0) = 1/2 - (1/pi) int_0^inf B(t) sin(t mu) / t dt
    {
        KahanSum acc;
        acc.add(0.5 * ampl.mu);  // t -> 0 limit of B(t) sin(t mu)/t
        for (int m = 1; m < m_count; ++m) {
            double t = dxi * static_cast<double>(m);
            acc.add((m + 1 == m_count ? 0.5 : 1.0) * b[m] * std::sin(t * ampl.mu) / t);
        }
        grid.delta_p_gil_pelaez = std::clamp(0.5 - acc.value() * dxi / std::numbers::pi, 0.0, 1.0);
    }

    grid.inversion_error = std::fabs(grid.delta_p - grid.delta_p_gil_pelaez) +
                           std::fabs(1.0 - grid.grid_mass) + 10.0 * opts.cutoff_threshold;
    if (std::fabs(grid.delta_p - grid.delta_p_gil_pelaez) > 1e-4)
        throw AccuracyError("invert: grid and Gil-Pelaez delta estimates disagree beyond 1e-4");
    return grid;
}

double gaussian_tail(double mu, double sigma2, double v) {
    if (!(v >= mu)) throw std::domain_error("gaussian_tail: V must be >= mu");
    if (!(sigma2 > 0.0)) throw std::domain_error("gaussian_tail: sigma2 must be positive");
    double d = v - mu;
    return std::exp(-d * d / (2.0 * sigma2));
}

MontgomeryBound montgomery_lower(const AmplitudeSet& ampl, std::size_t n) {
    if (n >= ampl.r.size())
        throw std::invalid_argument("montgomery_lower: n must be < table size");
    std::vector<double> sorted = ampl.r;
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());

    double head = 0.0;
    for (std::size_t k = 0; k < n; ++k) head += sorted[k];
    KahanSum tail;
    for (std::size_t k = n; k < sorted.size(); ++k) tail.add(sorted[k] * sorted[k]);
    double tail2 = tail.value() + ampl.tail_variance;

    MontgomeryBound out;
    out.v = ampl.mu + 2.0 * head;
    out.bound = std::pow(2.0, -40.0) *
                (n == 0 ? 1.0 : std::exp(-100.0 * head * head / tail2));
    return out;
}

double upper_tail_from_grid(const DistributionGrid& grid, double v) {
    if (grid.x.empty()) throw std::invalid_argument("upper_tail_from_grid: empty grid");
    double dx = grid.x[1] - grid.x[0];
    double mass = std::max(0.0, 0.5 * (1.0 - grid.grid_mass));  // beyond-grid upper tail
    for (std::size_t i = 0; i + 1 < grid.x.size(); ++i) {
        double x0 = grid.x[i], x1 = grid.x[i + 1];
        if (x0 >= v) {
            mass += 0.5 * (grid.psi[i] + grid.psi[i + 1]) * dx;
        } else if (x1 > v) {
            double f = (v - x0) / dx;
            double psi_at = grid.psi[i] + f * (grid.psi[i + 1] - grid.psi[i]);
            mass += 0.5 * (psi_at + grid.psi[i + 1]) * (x1 - v);
        }
    }
    return std::clamp(mass, 0.0, 1.0);
}

McSummary sample_x(const AmplitudeSet& ampl, const McOptions& opts) {
    if (opts.draws < 1) throw std::invalid_argument("sample_x: draws must be >= 1");
    const std::size_t exact = std::min(opts.exact_zeros, ampl.r.size());
    KahanSum lumped;  // amplitudes handled as one Gaussian
    for (std::size_t l = exact; l < ampl.r.size(); ++l) lumped.add(ampl.r[l] * ampl.r[l]);
    const double gauss_sd = std::sqrt(0.5 * (lumped.value() + ampl.tail_variance));

    const double sigma = std::sqrt(variance(ampl, true));
    const double h_min = ampl.mu - 6.0 * sigma, h_max = ampl.mu + 6.0 * sigma;
    const int bins = std::max(1, opts.histogram_bins);

    const int threads = resolve_threads(opts.threads);
    struct Partial {
        KahanSum sum, sumsq;
        uint64_t nonpos = 0;
        std::vector<uint64_t> hist;
    };
    std::vector<Partial> partials(threads);
    const Philox4x32 rng(opts.seed);

    parallel_blocks(opts.draws, threads, [&](int tid, std::size_t lo, std::size_t hi) {
        Partial& p = partials[tid];
        p.hist.assign(bins, 0);
        for (uint64_t d = lo; d < hi; ++d) {
            double x = ampl.mu;
            std::size_t l = 0;
            uint64_t block = 0;
            while (l < exact) {
                auto words = rng(d, block++);
                for (int w = 0; w < 4 && l < exact; ++w, ++l) {
                    double u = Philox4x32::to_unit(words[w]);
                    x += ampl.r[l] * std::cos(2.0 * std::numbers::pi * u);
                }
            }
            if (gauss_sd > 0.0) {
                auto words = rng(d, uint64_t{1} << 40);
                double u1 = Philox4x32::to_unit(words[0]);
                double u2 = Philox4x32::to_unit(words[1]);
                x += gauss_sd * std::sqrt(-2.0 * std::log(u1)) *
                     std::cos(2.0 * std::numbers::pi * u2);
            }
            p.sum.add(x);
            p.sumsq.add(x * x);
            if (x <= 0.0) ++p.nonpos;
            int bin = static_cast<int>((x - h_min) / (h_max - h_min) * bins);
            p.hist[std::clamp(bin, 0, bins - 1)]++;
        }
    });

    McSummary out;
    out.draws = opts.draws;
    out.hist_min = h_min;
    out.hist_max = h_max;
    out.histogram.assign(bins, 0);
    KahanSum total, total_sq;
    uint64_t nonpos = 0;
    for (const auto& p : partials) {
        total.add(p.sum.value());
        total_sq.add(p.sumsq.value());
        nonpos += p.nonpos;
        for (int i = 0; i < bins && !p.hist.empty(); ++i) out.histogram[i] += p.hist[i];
    }
    double n = static_cast<double>(opts.draws);
    out.mean = total.value() / n;
    out.variance = total_sq.value() / n - out.mean * out.mean;
    out.p_nonpositive = static_cast<double>(nonpos) / n;
    out.p_nonpositive_stderr =
        std::sqrt(std::max(0.0, out.p_nonpositive * (1.0 - out.p_nonpositive) / n));
    return out;
}

std::vector<SweepRow> alpha_sweep(const ZeroTable& table, const std::vector<double>& alphas,
                                  const InvertOptions& opts) {
    std::vector<SweepRow> rows;
    for (double a : alphas) {
        if (!(a >= 0.0 && a < 0.5))
            throw std::domain_error("alpha_sweep: alpha values must be in [0, 1/2)");
        AmplitudeSet ampl = amplitudes(table, a);
        SweepRow row;
        row.alpha = a;
        row.mu = ampl.mu;
        row.sigma2 = variance(ampl, false);
        DistributionGrid grid = invert(ampl, {}, opts);
        row.delta_p = grid.delta_p;
        row.gaussian_lower_bound = 1.0 - std::exp(-ampl.mu * ampl.mu / (2.0 * row.sigma2));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace liouville
