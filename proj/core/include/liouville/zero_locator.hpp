#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

namespace liouville {

struct ZeroLocatorOptions {
    int threads = 0;
    double step_fraction = 0.25;  // scan step as a fraction of the local mean gap
    int max_escalations = 4;      // each escalation shrinks the step by 4x
    bool debug = false;           // trace rescan decisions on stderr
};

// Locates the first `count` ordinates of critical-line zeros by scanning the
// Hardy Z function for sign changes and Newton-polishing each bracket. Block
// counts are verified against the theta-function zero count; blocks that come
// up short are rescanned with a finer step (catches Lehmer-style close pairs).
std::vector<double> locate_zeros(std::size_t count, const ZeroLocatorOptions& opts = {});

// Writes ordinates in the ingestion text format (one per line, '#' header).
void write_zeros_file(const std::filesystem::path& path, const std::vector<double>& ordinates,
                      const std::string& comment = "");

}  // namespace liouville
