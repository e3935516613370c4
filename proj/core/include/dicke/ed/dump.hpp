#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace dicke::ed {

// 16-byte header: "DSQ1", u64 dim (LE), version byte, 3 zero bytes; then
// dim little-endian doubles.
inline constexpr std::uint8_t kDumpVersion = 1;

void write_vector_dump(const std::filesystem::path& path,
                       const std::vector<double>& v);
std::vector<double> read_vector_dump(const std::filesystem::path& path);

}  // namespace dicke::ed
