#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace liouville {

// One nontrivial zero rho = 1/2 + i*gamma with the amplitudes entering the
// explicit formula: dzeta = |zeta'(rho)|, zeta2rho = |zeta(1 + 2i*gamma)|.
struct ZeroRecord {
    uint32_t index = 0;  // 1-based
    double gamma = 0.0;
    double dzeta = 0.0;     // 0 = not enriched yet
    double zeta2rho = 0.0;  // 0 = not enriched yet
};

inline uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

class ZeroTable {
public:
    // Text file: one decimal ordinate per line, strictly increasing,
    // '#' comments and blank lines allowed.
    static ZeroTable ingest(const std::filesystem::path& file);
    static ZeroTable from_ordinates(std::vector<double> ordinates, std::string digest = "");

    // Newton-refines each ordinate (up to three steps) and checks
    // |zeta(1/2 + i gamma)| < tol. Throws with the offending indices listed.
    void validate(double tol = 1e-4, bool refine = true, int threads = 0);

    // Fills dzeta and zeta2rho for every record. Idempotent; parallel map
    // with in-order writes. dzeta < 1e-6 flags a suspected multiple zero.
    void enrich(int threads = 0);
    bool enriched() const;

    // Amplitude cache: '# source_digest=...' header then
    // 'index,gamma,dzeta,zeta2rho' CSV rows (17 significant digits).
    void save_cache(const std::filesystem::path& file) const;
    static ZeroTable load_cache(const std::filesystem::path& file);

    std::size_t count_below(double T) const;  // zeros with gamma < T
    double max_gamma() const;

    const std::vector<ZeroRecord>& records() const { return records_; }
    const std::string& source_digest() const { return digest_; }
    const std::string& enriched_at() const { return enriched_at_; }

private:
    std::vector<ZeroRecord> records_;
    std::string digest_;
    std::string enriched_at_;  // ISO timestamp, empty if never enriched
};

// Two-term zero-counting asymptotic (1/2pi) T log T - ((1+log 2pi)/2pi) T.
double n_asymptotic(double T);

// J_k(T) = sum_{0<gamma<T} |zeta'(rho)|^{2k} for k in {-1, -1/2}; the
// weighted variant multiplies each term by |zeta(2 rho)|^{-2k}.
double discrete_moment(const ZeroTable& table, double k, double T, bool weighted);

}  // namespace liouville
