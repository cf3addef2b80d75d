#include "liouville/checkpoint.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace liouville {

namespace {

constexpr std::array<char, 8> kMagic = {'L', 'I', 'O', 'U', 'C', 'K', 'P', '1'};

static_assert(std::endian::native == std::endian::little,
              "checkpoint IO assumes a little-endian host");

template <typename T>
void put(std::ofstream& out, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.write(buf, sizeof(T));
}

template <typename T>
T get(std::ifstream& in) {
    char buf[sizeof(T)];
    in.read(buf, sizeof(T));
    if (!in) throw std::runtime_error("checkpoint file truncated");
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

}  // namespace

void write_checkpoint_file(const std::filesystem::path& path, const CheckpointFile& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open checkpoint file for writing: " + path.string());
    out.write(kMagic.data(), kMagic.size());
    put(out, data.alpha);
    put(out, data.x_max);
    put(out, data.stride);
    for (const auto& e : data.entries) {
        put(out, e.n);
        put(out, e.value);
    }
    if (!out) throw std::runtime_error("checkpoint write failed: " + path.string());
}

CheckpointFile read_checkpoint_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open checkpoint file: " + path.string());
    std::array<char, 8> magic;
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw std::runtime_error("bad checkpoint magic: " + path.string());

    CheckpointFile data;
    data.alpha = get<double>(in);
    data.x_max = get<uint64_t>(in);
    data.stride = get<uint64_t>(in);
    while (true) {
        char buf[16];
        in.read(buf, 16);
        if (in.gcount() == 0 && in.eof()) break;
        if (in.gcount() != 16) throw std::runtime_error("checkpoint file truncated: " + path.string());
        CheckpointEntry e;
        std::memcpy(&e.n, buf, 8);
        std::memcpy(&e.value, buf + 8, 8);
        data.entries.push_back(e);
    }
    return data;
}

}  // namespace liouville
