#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "liouville/summatory.hpp"

namespace liouville {

// Little-endian binary checkpoint file:
//   magic "LIOUCKP1" | alpha f64 | x_max u64 | stride u64 | (n u64, sum f64)*
struct CheckpointFile {
    double alpha = 0.0;
    uint64_t x_max = 0;
    uint64_t stride = 0;
    std::vector<CheckpointEntry> entries;
};

void write_checkpoint_file(const std::filesystem::path& path, const CheckpointFile& data);
CheckpointFile read_checkpoint_file(const std::filesystem::path& path);

}  // namespace liouville
