// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Heavy artifacts (zero table, amplitude cache, sieve scans) are cached in
// --cache-dir, so reruns are much faster than the first run.

#include <cstdio>
#include <cstring>
#include <string>

#include "liouville/acceptance.hpp"

int main(int argc, char** argv) {
    liouville::AcceptanceConfig cfg;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&](const char* name) -> std::string {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "%s needs a value\n", name);
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--quick") {
            cfg.quick = true;
        } else if (arg == "--cache-dir") {
            cfg.cache_dir = next("--cache-dir");
        } else if (arg == "--zeros-file") {
            cfg.zeros_file = next("--zeros-file");
        } else if (arg == "--threads") {
            cfg.threads = std::atoi(next("--threads").c_str());
        } else {
            std::fprintf(stderr, "unknown argument %s\n", arg.c_str());
            return 2;
        }
    }

    liouville::AcceptanceReport report;
    try {
        report = liouville::run_acceptance(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance pipeline error: %s\n", e.what());
        return 1;
    }

    for (const auto& c : report.criteria) {
        std::printf("[%2d] %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
        std::printf("     %s\n", c.detail.c_str());
    }
    std::printf("%d/%zu criteria pass (%.1f s)\n",
                static_cast<int>(std::count_if(report.criteria.begin(), report.criteria.end(),
                                               [](const auto& c) { return c.pass; })),
                report.criteria.size(), report.elapsed_seconds);
    return report.all_pass ? 0 : 1;
}
