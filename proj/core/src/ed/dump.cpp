#include "dicke/ed/dump.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace dicke::ed {
namespace {

void put_u64(unsigned char* out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(x >> (8 * i));
}

std::uint64_t get_u64(const unsigned char* in) {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return x;
}

}  // namespace

void write_vector_dump(const std::filesystem::path& path,
                       const std::vector<double>& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  std::array<unsigned char, 16> header{};
  std::memcpy(header.data(), "DSQ1", 4);
  put_u64(header.data() + 4, v.size());
  header[12] = kDumpVersion;
  out.write(reinterpret_cast<const char*>(header.data()), header.size());
  unsigned char buf[8];
  for (double x : v) {
    put_u64(buf, std::bit_cast<std::uint64_t>(x));
    out.write(reinterpret_cast<const char*>(buf), 8);
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<double> read_vector_dump(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::array<unsigned char, 16> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (!in || std::memcmp(header.data(), "DSQ1", 4) != 0) {
    throw std::runtime_error("not a DSQ1 dump: " + path.string());
  }
  if (header[12] != kDumpVersion) {
    throw std::runtime_error("unsupported dump version");
  }
  const std::uint64_t dim = get_u64(header.data() + 4);
  std::vector<double> v;
  v.reserve(dim);
  unsigned char buf[8];
  for (std::uint64_t i = 0; i < dim; ++i) {
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) throw std::runtime_error("truncated dump: " + path.string());
    v.push_back(std::bit_cast<double>(get_u64(buf)));
  }
  return v;
}

}  // namespace dicke::ed
