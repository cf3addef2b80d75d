#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace liouville {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceConfig {
    std::filesystem::path cache_dir = "acceptance_cache";
    std::filesystem::path zeros_file;  // optional pre-existing ordinate file
    bool quick = false;                // reduced-scale smoke variant
    int threads = 0;
    uint64_t mc_seed = 20250809;
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_pass = false;
    std::string zero_table_digest;
    double elapsed_seconds = 0.0;
};

// Runs the full verification pipeline (zero table, enrichment, sieve sweeps,
// distribution work) and evaluates each numbered criterion. Heavy artifacts
// are cached under cache_dir, so reruns are fast.
AcceptanceReport run_acceptance(const AcceptanceConfig& config);

}  // namespace liouville
