// liouville: weighted Liouville sums, zeta-zero machinery, and the limiting
// logarithmic distribution of L_alpha(x) / x^{1/2-alpha}.
//
// Subcommands: sieve, zeros, explicit, dist, fawaz, ccoeffs, moments,
// as-scan, reproduce. Exit codes: 0 success, 1 computation error, 2 usage.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liouville/acceptance.hpp"
#include "liouville/checkpoint.hpp"
#include "liouville/dirichlet_c.hpp"
#include "liouville/distribution.hpp"
#include "liouville/errors.hpp"
#include "liouville/explicit_formula.hpp"
#include "liouville/fawaz.hpp"
#include "liouville/sieve.hpp"
#include "liouville/special_functions.hpp"
#include "liouville/summatory.hpp"
#include "liouville/version.hpp"
#include "liouville/zero_locator.hpp"
#include "liouville/zero_table.hpp"
#include "liouville/zeta.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace liouville;

namespace {

struct RunConfig {
    std::string zeros_path;
    std::string cache_path;
    std::string config_file;
    std::string output_dir = ".";
    int threads = 0;
    uint64_t seed = 1;
};

// precedence: explicit flags > LIOUVILLE_ZEROS > config file
void finalize_config(RunConfig& cfg) {
    json file;
    if (!cfg.config_file.empty()) {
        std::ifstream in(cfg.config_file);
        if (!in) throw std::runtime_error("cannot open config file: " + cfg.config_file);
        in >> file;
    }
    if (cfg.zeros_path.empty()) {
        if (const char* env = std::getenv("LIOUVILLE_ZEROS")) cfg.zeros_path = env;
    }
    if (cfg.zeros_path.empty() && file.contains("zeros")) cfg.zeros_path = file["zeros"];
    if (cfg.cache_path.empty() && file.contains("cache")) cfg.cache_path = file["cache"];
    if (cfg.threads == 0 && file.contains("threads")) cfg.threads = file["threads"];
    if (cfg.output_dir == "." && file.contains("output_dir")) cfg.output_dir = file["output_dir"];
}

json base_report(const RunConfig& cfg, const std::string& command) {
    json j;
    j["version"] = kVersion;
    j["command"] = command;
    j["config"] = {{"zeros", cfg.zeros_path},
                   {"cache", cfg.cache_path},
                   {"threads", cfg.threads},
                   {"seed", cfg.seed}};
    return j;
}

std::string default_cache_for(const std::string& zeros_path) {
    return zeros_path + ".amplitudes.csv";
}

// Ingest + validate + enrich with a digest-checked amplitude cache.
ZeroTable load_enriched(const RunConfig& cfg, bool refresh = false) {
    if (cfg.zeros_path.empty())
        throw std::runtime_error(
            "no zero table given (use --zeros-file, LIOUVILLE_ZEROS, or a config file)");
    std::string cache = cfg.cache_path.empty() ? default_cache_for(cfg.zeros_path) : cfg.cache_path;
    ZeroTable table = ZeroTable::ingest(cfg.zeros_path);
    if (!refresh && fs::exists(cache)) {
        ZeroTable cached = ZeroTable::load_cache(cache);
        if (cached.source_digest() == table.source_digest() && cached.enriched()) return cached;
    }
    table.validate(1e-4, true, cfg.threads);
    table.enrich(cfg.threads);
    table.save_cache(cache);
    return table;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------------------

int cmd_sieve(const RunConfig& cfg, double alpha, uint64_t x_max, uint64_t stride,
              const std::string& csv_path, const std::string& signs_path,
              const std::string& checkpoint_path, const std::string& resume_path,
              const std::string& out_path) {
    ScanConfig scan;
    scan.alphas = {alpha};
    scan.x_max = x_max;
    scan.checkpoint_stride = stride;
    scan.threads = cfg.threads;
    if (!resume_path.empty()) {
        CheckpointFile ck = read_checkpoint_file(resume_path);
        if (ck.alpha != alpha)
            throw std::runtime_error("resume checkpoint alpha does not match --alpha");
        if (ck.entries.empty()) throw std::runtime_error("resume checkpoint has no entries");
        scan.resume_n = ck.entries.back().n;
        scan.resume_values = {ck.entries.back().value};
    }
    SummatorySeries series = scan_summatory(scan)[0];

    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open CSV file: " + csv_path);
        out << "n,L_alpha,sign\n";
        char buf[96];
        for (const auto& c : series.checkpoints) {
            int sign = c.value > 0.0 ? 1 : (c.value < 0.0 ? -1 : 0);
            std::snprintf(buf, sizeof buf, "%llu,%.17g,%d\n",
                          static_cast<unsigned long long>(c.n), c.value, sign);
            out << buf;
        }
    }
    if (!signs_path.empty()) {
        std::ofstream out(signs_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open sign-log file: " + signs_path);
        for (const auto& ch : series.sign_changes)
            out << "{\"n\":" << ch.n << ",\"from\":" << ch.from << ",\"to\":" << ch.to << "}\n";
    }
    if (!checkpoint_path.empty()) {
        CheckpointFile ck{alpha, x_max, stride, series.checkpoints};
        write_checkpoint_file(checkpoint_path, ck);
    }

    json j = base_report(cfg, "sieve");
    j["alpha"] = alpha;
    j["x_max"] = x_max;
    j["final_value"] = series.final_value;
    if (series.final_value_int) j["final_value_int"] = *series.final_value_int;
    j["sign_changes"] = series.sign_changes.size();
    if (!series.sign_changes.empty()) {
        json first;
        for (std::size_t i = 0; i < std::min<std::size_t>(series.sign_changes.size(), 8); ++i) {
            const auto& ch = series.sign_changes[i];
            first.push_back({{"n", ch.n}, {"from", ch.from}, {"to", ch.to}});
        }
        j["first_sign_changes"] = first;
    }
    j["min"] = {{"n", series.min_n}, {"value", series.min_value}};
    j["max"] = {{"n", series.max_n}, {"value", series.max_value}};
    j["log_measure_nonpos"] = series.log_measure_nonpos;
    j["empirical_log_density"] = x_max >= 2 ? empirical_log_density(series) : 0.0;
    emit(j, out_path);
    return 0;
}

int cmd_dist(const RunConfig& cfg, double alpha, bool tail, GridSpec grid_spec,
             const std::string& csv_path, const std::string& out_path) {
    ZeroTable table = load_enriched(cfg);
    AmplitudeSet ampl = amplitudes(table, alpha);
    DistributionGrid grid = invert(ampl, grid_spec, {.tail_factor = tail, .threads = cfg.threads});

    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open CSV file: " + csv_path);
        out << "x,psi\n";
        char buf[80];
        for (std::size_t i = 0; i < grid.x.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", grid.x[i], grid.psi[i]);
            out << buf;
        }
    }
    json j = base_report(cfg, "dist");
    j["zero_table_digest"] = table.source_digest();
    j["alpha"] = alpha;
    j["tail_correction"] = tail;
    j["mu"] = grid.mu;
    j["sigma2"] = grid.sigma2;
    j["sigma2_with_tail"] = grid.sigma2_with_tail;
    j["deltaP"] = grid.delta_p;
    j["deltaP_gil_pelaez"] = grid.delta_p_gil_pelaez;
    j["cutoffXi"] = grid.cutoff_xi;
    j["grid_mass"] = grid.grid_mass;
    j["grid_mean"] = grid.grid_mean;
    j["grid_median"] = grid.grid_median;
    j["deltaP_above_paper_bound"] = grid.delta_p >= 0.959321;
    emit(j, out_path);
    return 0;
}

int cmd_reproduce(const RunConfig& cfg, bool quick, const std::string& cache_dir,
                  const std::string& out_path) {
    AcceptanceConfig acfg;
    acfg.quick = quick;
    acfg.threads = cfg.threads;
    acfg.mc_seed = cfg.seed == 1 ? 20250809 : cfg.seed;
    if (!cache_dir.empty()) acfg.cache_dir = cache_dir;
    if (!cfg.zeros_path.empty()) acfg.zeros_file = cfg.zeros_path;
    AcceptanceReport rep = run_acceptance(acfg);

    json j = base_report(cfg, "reproduce");
    j["quick"] = quick;
    j["zero_table_digest"] = rep.zero_table_digest;
    j["elapsed_seconds"] = rep.elapsed_seconds;
    json crit = json::array();
    for (const auto& c : rep.criteria) {
        std::printf("[%2d] %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
        std::printf("     %s\n", c.detail.c_str());
        crit.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["criteria"] = crit;
    j["all_pass"] = rep.all_pass;
    std::printf("%s (%.1fs)\n", rep.all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED",
                rep.elapsed_seconds);
    emit(j, out_path);
    return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Liouville sums, zeta zeros, and limiting distributions"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--config", cfg.config_file, "JSON config file (flags and LIOUVILLE_ZEROS win)");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", cfg.seed, "random seed for Monte Carlo work");

    // ---- sieve
    auto* sieve = app.add_subcommand("sieve", "stream L_alpha(n) with sign statistics");
    double s_alpha = 0.0;
    uint64_t s_xmax = 1'000'000, s_stride = 1'000'000;
    std::string s_csv, s_signs, s_ckpt, s_resume, s_out;
    sieve->add_option("--alpha", s_alpha, "weight alpha in [0, 1/2]")->required();
    sieve->add_option("--xmax", s_xmax, "upper limit X")->required();
    sieve->add_option("--checkpoint-stride", s_stride, "checkpoint every S integers");
    sieve->add_option("--emit-csv", s_csv, "write n,L_alpha,sign rows at checkpoints");
    sieve->add_option("--emit-signs", s_signs, "write sign-change log as JSON lines");
    sieve->add_option("--checkpoint-file", s_ckpt, "write a binary checkpoint file");
    sieve->add_option("--resume", s_resume, "resume from a binary checkpoint file");
    sieve->add_option("--out", s_out, "write the JSON report here instead of stdout");

    // ---- zeros
    auto* zeros = app.add_subcommand("zeros", "zero-table utilities");
    zeros->require_subcommand(1);
    auto* z_locate = zeros->add_subcommand("locate", "locate the first N zero ordinates");
    std::size_t zl_count = 100;
    std::string zl_out = "zeros.txt";
    z_locate->add_option("--count", zl_count, "number of zeros")->required();
    z_locate->add_option("--out", zl_out, "ordinate file to write");

    auto* z_ingest = zeros->add_subcommand("ingest", "parse an ordinate file into the cache");
    std::string zi_file;
    z_ingest->add_option("file", zi_file, "ordinate text file")->required();

    auto* z_validate = zeros->add_subcommand("validate", "refine and check |zeta(rho)| < tol");
    double zv_tol = 1e-4;
    z_validate->add_option("--tol", zv_tol, "validation tolerance");

    auto* z_enrich = zeros->add_subcommand("enrich", "fill |zeta'(rho)| and |zeta(2rho)|");

    auto* z_moments = zeros->add_subcommand("moments", "discrete moments J_k(T)");
    double zm_k = -1.0, zm_t = 0.0;
    bool zm_weighted = false;
    z_moments->add_option("--k", zm_k, "exponent k in {-1, -0.5}");
    z_moments->add_option("--T", zm_t, "height T (0 = table top)");
    z_moments->add_flag("--weighted", zm_weighted, "weight terms by |zeta(2rho)|^{-2k}");

    // top-level alias
    auto* moments = app.add_subcommand("moments", "discrete moments J_k(T) (alias of zeros moments)");
    double m_k = -1.0, m_t = 0.0;
    bool m_weighted = false;
    moments->add_option("--k", m_k, "exponent k in {-1, -0.5}");
    moments->add_option("--T", m_t, "height T (0 = table top)");
    moments->add_flag("--weighted", m_weighted, "weight terms by |zeta(2rho)|^{-2k}");

    // ---- explicit
    auto* expl = app.add_subcommand("explicit", "truncated explicit-formula model vs sieved truth");
    double e_alpha = 0.0, e_t = 0.0;
    uint64_t e_xmin = 10'000, e_xmax = 1'000'000;
    int e_samples = 200;
    std::string e_csv, e_out;
    bool e_half_constants = false;
    expl->add_option("--alpha", e_alpha, "weight alpha in [0, 1/2]")->required();
    expl->add_option("--T", e_t, "truncation height (0 = table top)");
    expl->add_option("--x-min", e_xmin, "lower sample bound");
    expl->add_option("--x-max", e_xmax, "upper sample bound");
    expl->add_option("--samples", e_samples, "log-spaced sample count");
    expl->add_flag("--half-constants", e_half_constants,
                   "include the secondary constants of the alpha = 1/2 main term");
    expl->add_option("--emit-csv", e_csv, "write x,truth,model,residual rows");
    expl->add_option("--out", e_out, "JSON report path");

    // ---- dist
    auto* dist = app.add_subcommand("dist", "limiting logarithmic distribution nu_alpha");
    double d_alpha = 0.0;
    std::string d_tail = "on", d_csv, d_out;
    GridSpec d_grid;
    dist->add_option("--alpha", d_alpha, "weight alpha in [0, 1/2)");
    dist->add_option("--zeros-file", cfg.zeros_path, "zero ordinate file");
    dist->add_option("--tail-correction", d_tail, "on|off Gaussian stand-in for zeros beyond the table")
        ->check(CLI::IsMember({"on", "off"}));
    dist->add_option("--grid-min", d_grid.x_min, "density grid lower edge");
    dist->add_option("--grid-max", d_grid.x_max, "density grid upper edge");
    dist->add_option("--grid-points", d_grid.points, "density grid points");
    dist->add_option("--emit-csv", d_csv, "write x,psi rows");
    dist->add_option("--out", d_out, "JSON summary path");

    auto* d_tails = dist->add_subcommand("tails", "tail bounds at thresholds V");
    std::vector<double> dt_v;
    d_tails->add_option("--V", dt_v, "thresholds (comma separated)")->delimiter(',')->required();

    auto* d_mc = dist->add_subcommand("mc", "Monte Carlo draws of the random model X_alpha");
    uint64_t dm_draws = 1'000'000;
    std::size_t dm_exact = 256;
    d_mc->add_option("--draws", dm_draws, "number of draws");
    d_mc->add_option("--exact-zeros", dm_exact, "cos terms sampled exactly");

    auto* d_sweep = dist->add_subcommand("sweep", "bias diagnostics across alphas");
    std::vector<double> ds_alphas;
    d_sweep->add_option("--alphas", ds_alphas, "alpha values")->delimiter(',')->required();

    // ---- fawaz
    auto* fawaz = app.add_subcommand("fawaz", "Fresnel-series function I(x) and I_alpha(x)");
    double f_x = 10.0;
    std::optional<double> f_alpha;
    uint64_t f_terms = 100'000;
    double f_max_tail = 1e-6;
    std::string f_out;
    fawaz->add_option("--x", f_x, "argument x > 0")->required();
    fawaz->add_option("--alpha", f_alpha, "weight for I_alpha (omit for I)");
    fawaz->add_option("--n-terms", f_terms, "series truncation");
    fawaz->add_option("--max-tail", f_max_tail, "accuracy gate on the tail estimate");
    fawaz->add_option("--out", f_out, "JSON report path");

    // ---- ccoeffs
    auto* ccoeffs = app.add_subcommand("ccoeffs", "Dirichlet coefficients of zeta(2s-1)/zeta(s)");
    uint64_t c_n = 100;
    std::string c_csv, c_out;
    ccoeffs->add_option("--n", c_n, "compute c(1..N)")->required();
    ccoeffs->add_option("--emit-csv", c_csv, "write n,c rows");
    ccoeffs->add_option("--out", c_out, "JSON report path");

    // ---- as-scan
    auto* as_scan = app.add_subcommand("as-scan", "Anderson-Stark functional over a range of x0");
    uint64_t a_min = 100, a_max = 1'000'000;
    int a_count = 40;
    uint64_t a_terms = 1'000'000;
    std::string a_out;
    as_scan->add_option("--x0-min", a_min, "smallest x0");
    as_scan->add_option("--x0-max", a_max, "largest x0");
    as_scan->add_option("--samples", a_count, "log-spaced sample count");
    as_scan->add_option("--n-terms", a_terms, "Fawaz series truncation");
    as_scan->add_option("--out", a_out, "JSON report path");

    // ---- reproduce
    auto* reproduce = app.add_subcommand("reproduce", "run the full verification pipeline");
    bool r_quick = false;
    std::string r_cache, r_out = "reproduce_report.json";
    reproduce->add_flag("--quick", r_quick, "reduced-scale smoke variant");
    reproduce->add_option("--cache-dir", r_cache, "cache directory for heavy artifacts");
    reproduce->add_option("--out", r_out, "JSON report path");

    // shared zero-source flags on the subcommands that need a table
    for (auto* sc : {zeros, expl, moments, reproduce})
        sc->add_option("--zeros-file", cfg.zeros_path, "zero ordinate file");
    for (auto* sc : {zeros, dist, expl, moments})
        sc->add_option("--cache", cfg.cache_path, "amplitude cache path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        finalize_config(cfg);

        if (sieve->parsed())
            return cmd_sieve(cfg, s_alpha, s_xmax, s_stride, s_csv, s_signs, s_ckpt, s_resume, s_out);

        if (zeros->parsed()) {
            if (z_locate->parsed()) {
                auto ords = locate_zeros(zl_count, {.threads = cfg.threads});
                write_zeros_file(zl_out, ords,
                                 "first " + std::to_string(ords.size()) + " nontrivial zero ordinates");
                json j = base_report(cfg, "zeros locate");
                j["count"] = ords.size();
                j["file"] = zl_out;
                j["last_ordinate"] = ords.back();
                emit(j, "");
                return 0;
            }
            if (z_ingest->parsed()) {
                ZeroTable table = ZeroTable::ingest(zi_file);
                std::string cache = cfg.cache_path.empty() ? default_cache_for(zi_file) : cfg.cache_path;
                table.save_cache(cache);
                json j = base_report(cfg, "zeros ingest");
                j["file"] = zi_file;
                j["zero_table_digest"] = table.source_digest();
                j["count"] = table.records().size();
                j["cache"] = cache;
                j["enriched"] = table.enriched();
                emit(j, "");
                return 0;
            }
            if (z_validate->parsed()) {
                ZeroTable table = ZeroTable::ingest(cfg.zeros_path);
                table.validate(zv_tol, true, cfg.threads);
                json j = base_report(cfg, "zeros validate");
                j["zero_table_digest"] = table.source_digest();
                j["count"] = table.records().size();
                j["tol"] = zv_tol;
                j["valid"] = true;
                emit(j, "");
                return 0;
            }
            if (z_enrich->parsed()) {
                ZeroTable table = load_enriched(cfg, /*refresh=*/true);
                json j = base_report(cfg, "zeros enrich");
                j["zero_table_digest"] = table.source_digest();
                j["count"] = table.records().size();
                j["cache"] = cfg.cache_path.empty() ? default_cache_for(cfg.zeros_path) : cfg.cache_path;
                j["enriched_at"] = table.enriched_at();
                emit(j, "");
                return 0;
            }
            // moments via the zeros subcommand
            m_k = zm_k;
            m_t = zm_t;
            m_weighted = zm_weighted;
        }

        if (moments->parsed() || (zeros->parsed() && z_moments->parsed())) {
            ZeroTable table = load_enriched(cfg);
            double t = m_t > 0.0 ? m_t : table.max_gamma();
            double value = discrete_moment(table, m_k, t, m_weighted);
            json j = base_report(cfg, "moments");
            j["zero_table_digest"] = table.source_digest();
            j["k"] = m_k;
            j["T"] = t;
            j["weighted"] = m_weighted;
            j["value"] = value;
            j["value_over_T"] = value / t;
            if (m_k == -1.0)
                j["reference"] = m_weighted ? 1.0 / (2.0 * std::numbers::pi)
                                            : 3.0 / std::pow(std::numbers::pi, 3.0);
            emit(j, "");
            return 0;
        }

        if (expl->parsed()) {
            ZeroTable table = load_enriched(cfg);
            double t_cut = e_t > 0.0 ? e_t : table.max_gamma() + 0.01;
            ScanConfig scan;
            scan.alphas = {e_alpha};
            scan.x_max = e_xmax;
            scan.checkpoint_stride = 0;
            scan.sample_points = log_spaced_samples(e_xmin, e_xmax, e_samples);
            scan.threads = cfg.threads;
            SummatorySeries truth = scan_summatory(scan)[0];
            ExplicitModel model = e_alpha == 0.5
                                      ? build_model_half(table, t_cut, e_half_constants, nullptr, cfg.threads)
                                      : build_model(table, e_alpha, t_cut, nullptr, cfg.threads);
            ResidualReport rep = residuals(model, truth, static_cast<double>(e_xmin),
                                           static_cast<double>(e_xmax));
            if (!e_csv.empty()) {
                std::ofstream out(e_csv, std::ios::trunc);
                if (!out) throw std::runtime_error("cannot open CSV file: " + e_csv);
                out << "x,truth,model,residual\n";
                char buf[128];
                for (const auto& s : rep.samples) {
                    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.x, s.truth,
                                  s.model, s.residual);
                    out << buf;
                }
            }
            json j = base_report(cfg, "explicit");
            j["zero_table_digest"] = table.source_digest();
            j["alpha"] = e_alpha;
            j["T"] = t_cut;
            j["zero_count"] = model.b.size();
            j["samples"] = rep.samples.size();
            j["rms_residual"] = rep.rms;
            j["error_budget"] = rep.error_budget;
            j["mu"] = model.mu;
            emit(j, e_out);
            return 0;
        }

        if (dist->parsed()) {
            if (d_tails->parsed()) {
                ZeroTable table = load_enriched(cfg);
                AmplitudeSet ampl = amplitudes(table, d_alpha);
                DistributionGrid grid = invert(ampl, d_grid, {.threads = cfg.threads});
                json rows = json::array();
                for (double v : dt_v) {
                    TailReport tr;
                    tr.v = v;
                    tr.gaussian_upper = v >= ampl.mu ? gaussian_tail(ampl.mu, grid.sigma2, v) : 1.0;
                    tr.inverted_estimate = upper_tail_from_grid(grid, v);
                    tr.montgomery_lower = 0.0;
                    // smallest Montgomery threshold at or above v gives a
                    // valid lower bound for nu([v, inf))
                    for (std::size_t n = 0; n < std::min<std::size_t>(ampl.r.size(), 64); ++n) {
                        MontgomeryBound mb = montgomery_lower(ampl, n);
                        if (mb.v >= v) {
                            tr.montgomery_lower = mb.bound;
                            break;
                        }
                    }
                    rows.push_back({{"V", tr.v},
                                    {"gaussian_upper", tr.gaussian_upper},
                                    {"montgomery_lower", tr.montgomery_lower},
                                    {"inverted_estimate", tr.inverted_estimate}});
                }
                json j = base_report(cfg, "dist tails");
                j["zero_table_digest"] = table.source_digest();
                j["alpha"] = d_alpha;
                j["tails"] = rows;
                emit(j, d_out);
                return 0;
            }
            if (d_mc->parsed()) {
                ZeroTable table = load_enriched(cfg);
                AmplitudeSet ampl = amplitudes(table, d_alpha);
                McSummary mc = sample_x(ampl, {.draws = dm_draws,
                                               .seed = cfg.seed,
                                               .exact_zeros = dm_exact,
                                               .threads = cfg.threads});
                json j = base_report(cfg, "dist mc");
                j["zero_table_digest"] = table.source_digest();
                j["alpha"] = d_alpha;
                j["draws"] = mc.draws;
                j["mean"] = mc.mean;
                j["variance"] = mc.variance;
                j["p_nonpositive"] = mc.p_nonpositive;
                j["p_nonpositive_stderr"] = mc.p_nonpositive_stderr;
                j["histogram"] = {{"min", mc.hist_min}, {"max", mc.hist_max}, {"counts", mc.histogram}};
                emit(j, d_out);
                return 0;
            }
            if (d_sweep->parsed()) {
                ZeroTable table = load_enriched(cfg);
                auto rows = alpha_sweep(table, ds_alphas, {.threads = cfg.threads});
                json arr = json::array();
                for (const auto& r : rows)
                    arr.push_back({{"alpha", r.alpha},
                                   {"mu", r.mu},
                                   {"sigma2", r.sigma2},
                                   {"deltaP", r.delta_p},
                                   {"gaussian_lower_bound", r.gaussian_lower_bound}});
                json j = base_report(cfg, "dist sweep");
                j["zero_table_digest"] = table.source_digest();
                j["rows"] = arr;
                emit(j, d_out);
                return 0;
            }
            return cmd_dist(cfg, d_alpha, d_tail == "on", d_grid, d_csv, d_out);
        }

        if (fawaz->parsed()) {
            FawazSeries series(f_terms);
            json j = base_report(cfg, "fawaz");
            j["x"] = f_x;
            j["n_terms"] = f_terms;
            if (f_alpha) {
                FawazAlphaResult r = fawaz_i_alpha(series, f_x, *f_alpha);
                FawazAlphaResult c = fawaz_i_alpha_constant(series, *f_alpha);
                j["alpha"] = *f_alpha;
                j["value"] = r.value;
                j["error_estimate"] = r.error_estimate;
                j["limit_constant"] = c.value;
                j["limit_constant_error"] = c.error_estimate;
            } else {
                FawazResult r = series.value(f_x, f_max_tail);
                j["value"] = r.value;
                j["tail_estimate"] = r.tail_estimate;
                j["anderson_stark_envelope"] = 6.43700967 / std::sqrt(f_x);
            }
            emit(j, f_out);
            return 0;
        }

        if (ccoeffs->parsed()) {
            auto c = c_coefficients(c_n);
            if (!c_csv.empty()) {
                std::ofstream out(c_csv, std::ios::trunc);
                if (!out) throw std::runtime_error("cannot open CSV file: " + c_csv);
                out << "n,c\n";
                for (uint64_t n = 1; n <= c_n; ++n) out << n << ',' << c[n] << '\n';
            }
            json j = base_report(cfg, "ccoeffs");
            j["n"] = c_n;
            j["tail_majorant_3_2"] = c_tail_majorant(c_n, 1.5);
            json head = json::array();
            for (uint64_t n = 1; n <= std::min<uint64_t>(c_n, 16); ++n) head.push_back(c[n]);
            j["head"] = head;
            emit(j, c_out);
            return 0;
        }

        if (as_scan->parsed()) {
            if (a_min < 2) throw std::runtime_error("as-scan: x0 must be >= 2");
            std::vector<uint64_t> points = log_spaced_samples(a_min, a_max, a_count);
            ScanConfig scan;
            scan.alphas = {0.0};
            scan.x_max = a_max;
            scan.checkpoint_stride = 0;
            scan.sample_points = points;
            scan.threads = cfg.threads;
            SummatorySeries series = scan_summatory(scan)[0];
            FawazSeries fs_series(a_terms);
            json rows = json::array();
            double lo = 1e300, hi = -1e300;
            for (const auto& smp : series.samples) {
                FawazResult iv = fs_series.value(static_cast<double>(smp.n), 1.0);
                AndersonStarkSample s = anderson_stark(smp.n, smp.value, iv.value);
                lo = std::min(lo, s.functional);
                hi = std::max(hi, s.functional);
                rows.push_back({{"x0", s.x0},
                                {"L", s.l_value},
                                {"I", s.i_value},
                                {"functional", s.functional}});
            }
            json j = base_report(cfg, "as-scan");
            j["samples"] = rows;
            j["min_functional"] = lo;
            j["max_functional"] = hi;
            j["documented_targets"] = {{"liminf_upper_bound", -1.389278414},
                                       {"limsup_lower_bound", 0.061867262},
                                       {"note", "certified extremes use counts near 10^14, "
                                                "outside desk range; reported for context"}};
            emit(j, a_out);
            return 0;
        }

        if (reproduce->parsed()) return cmd_reproduce(cfg, r_quick, r_cache, r_out);

        std::fprintf(stderr, "no subcommand handled\n");
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
