#include "liouville/zero_table.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "liouville/errors.hpp"
#include "liouville/parallel.hpp"
#include "liouville/zeta.hpp"

namespace liouville {

namespace {

using cplx = std::complex<double>;

std::string read_whole_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open zero file: " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string hex_digest(uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string iso_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// One Newton step for the ordinate: t <- t - Re[zeta / (i zeta')] at 1/2 + it.
double newton_step(double gamma) {
    ZetaPairResult zp = zeta_and_prime_em(cplx(0.5, gamma));
    cplx delta = zp.zeta / (cplx(0.0, 1.0) * zp.zeta_prime);
    return gamma - delta.real();
}

}  // namespace

ZeroTable ZeroTable::ingest(const std::filesystem::path& file) {
    std::string content = read_whole_file(file);
    ZeroTable table;
    table.digest_ = hex_digest(fnv1a64(content));

    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);

        char* end = nullptr;
        double g = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw std::runtime_error("zero file parse error at line " + std::to_string(line_no) +
                                     ": '" + tok + "'");
        if (!(g > prev))
            throw std::runtime_error("zero file monotonicity violation at line " +
                                     std::to_string(line_no));
        // gamma_1 > 14: anything below is not a critical-line ordinate
        if (g < 14.0)
            throw std::runtime_error("zero file ordinate below 14 at line " + std::to_string(line_no));
        prev = g;
        table.records_.push_back(
            {static_cast<uint32_t>(table.records_.size() + 1), g, 0.0, 0.0});
    }
    return table;
}

ZeroTable ZeroTable::from_ordinates(std::vector<double> ordinates, std::string digest) {
    for (std::size_t i = 0; i + 1 < ordinates.size(); ++i) {
        if (!(ordinates[i] < ordinates[i + 1]))
            throw std::runtime_error("from_ordinates: ordinates not strictly increasing");
    }
    ZeroTable table;
    if (digest.empty()) {
        std::string bytes(reinterpret_cast<const char*>(ordinates.data()),
                          ordinates.size() * sizeof(double));
        digest = hex_digest(fnv1a64(bytes));
    }
    table.digest_ = std::move(digest);
    table.records_.reserve(ordinates.size());
    for (std::size_t i = 0; i < ordinates.size(); ++i)
        table.records_.push_back({static_cast<uint32_t>(i + 1), ordinates[i], 0.0, 0.0});
    return table;
}

void ZeroTable::validate(double tol, bool refine, int threads) {
    std::vector<uint32_t> bad(records_.size(), 0);
    parallel_blocks(records_.size(), threads, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            double g = records_[i].gamma;
            if (refine) {
                for (int step = 0; step < 3; ++step) {
                    double next = newton_step(g);
                    if (!(std::abs(next - g) < 0.5)) break;  // refinement ran away
                    bool done = std::abs(next - g) < 1e-12 * std::max(1.0, g);
                    g = next;
                    if (done) break;
                }
            }
            double mag = std::abs(zeta_em(cplx(0.5, g)).value);
            if (!(mag < tol))
                bad[i] = records_[i].index;
            else
                records_[i].gamma = g;
        }
    });
    std::string offenders;
    int shown = 0;
    for (uint32_t idx : bad) {
        if (idx == 0) continue;
        if (shown < 8) offenders += (shown ? "," : "") + std::to_string(idx);
        ++shown;
    }
    if (shown > 0)
        throw AccuracyError("zero validation failed for " + std::to_string(shown) +
                            " ordinate(s), indices: " + offenders);
    for (std::size_t i = 0; i + 1 < records_.size(); ++i) {
        if (!(records_[i].gamma < records_[i + 1].gamma))
            throw std::runtime_error("zero table order broken after refinement near index " +
                                     std::to_string(i + 1));
    }
}

void ZeroTable::enrich(int threads) {
    parallel_blocks(records_.size(), threads, [&](int, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            ZeroRecord& rec = records_[i];
            double dz = std::abs(zeta_prime_em(cplx(0.5, rec.gamma)).value);
            if (!(dz >= 1e-6))
                throw AccuracyError("enrich: |zeta'(rho)| below 1e-6 at index " +
                                    std::to_string(rec.index) + " (suspected multiple zero)");
            rec.dzeta = dz;
            rec.zeta2rho = std::abs(zeta_em(cplx(1.0, 2.0 * rec.gamma)).value);
        }
    });
    enriched_at_ = iso_now();
}

bool ZeroTable::enriched() const {
    if (records_.empty()) return true;
    for (const auto& r : records_)
        if (!(r.dzeta > 0.0) || !(r.zeta2rho > 0.0)) return false;
    return true;
}

void ZeroTable::save_cache(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open amplitude cache for writing: " + file.string());
    out << "# source_digest=" << digest_ << " enriched_at=" << enriched_at_ << "\n";
    out << "index,gamma,dzeta,zeta2rho\n";
    char buf[128];
    for (const auto& r : records_) {
        std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.17g\n", r.index, r.gamma, r.dzeta,
                      r.zeta2rho);
        out << buf;
    }
    if (!out) throw std::runtime_error("amplitude cache write failed: " + file.string());
}

ZeroTable ZeroTable::load_cache(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open amplitude cache: " + file.string());
    ZeroTable table;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# source_digest=", 0) != 0)
        throw std::runtime_error("amplitude cache missing digest header: " + file.string());
    {
        std::string rest = line.substr(std::string("# source_digest=").size());
        std::size_t sp = rest.find(' ');
        table.digest_ = rest.substr(0, sp);
        std::size_t ea = rest.find("enriched_at=");
        if (ea != std::string::npos) table.enriched_at_ = rest.substr(ea + 12);
    }
    if (!std::getline(in, line) || line != "index,gamma,dzeta,zeta2rho")
        throw std::runtime_error("amplitude cache missing column header: " + file.string());
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ZeroRecord rec;
        unsigned idx = 0;
        if (std::sscanf(line.c_str(), "%u,%lg,%lg,%lg", &idx, &rec.gamma, &rec.dzeta,
                        &rec.zeta2rho) != 4)
            throw std::runtime_error("amplitude cache parse error: " + line);
        rec.index = idx;
        if (!table.records_.empty() && !(rec.gamma > table.records_.back().gamma))
            throw std::runtime_error("amplitude cache not increasing in gamma");
        table.records_.push_back(rec);
    }
    return table;
}

std::size_t ZeroTable::count_below(double T) const {
    auto it = std::lower_bound(records_.begin(), records_.end(), T,
                               [](const ZeroRecord& r, double t) { return r.gamma < t; });
    return static_cast<std::size_t>(it - records_.begin());
}

double ZeroTable::max_gamma() const {
    return records_.empty() ? 0.0 : records_.back().gamma;
}

double n_asymptotic(double T) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return T / two_pi * std::log(T) - (1.0 + std::log(two_pi)) / two_pi * T;
}

double discrete_moment(const ZeroTable& table, double k, double T, bool weighted) {
    if (k != -1.0 && k != -0.5) throw std::invalid_argument("discrete_moment: k must be -1 or -1/2");
    if (T > table.max_gamma() + 1.0)
        throw std::out_of_range("discrete_moment: T beyond table range");
    KahanSum sum;
    for (const auto& r : table.records()) {
        if (r.gamma >= T) break;
        if (!(r.dzeta > 0.0)) throw std::runtime_error("discrete_moment: table not enriched");
        double term = std::pow(r.dzeta, 2.0 * k);
        if (weighted) term *= std::pow(r.zeta2rho, -2.0 * k);
        sum.add(term);
    }
    return sum.value();
}

}  // namespace liouville
