#include "zesprit/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "zesprit/errors.hpp"

namespace zesprit {

namespace {

static_assert(sizeof(double) == 8, "float64 file format needs 8-byte double");

uint64_t to_le(uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) return v;
  uint64_t r = 0;
  for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xFF);
  return r;
}

void put_f64(std::ofstream& out, double x) {
  uint64_t bits;
  std::memcpy(&bits, &x, 8);
  bits = to_le(bits);
  out.write(reinterpret_cast<const char*>(&bits), 8);
}

double get_f64(const char* p) {
  uint64_t bits;
  std::memcpy(&bits, p, 8);
  bits = to_le(bits);
  double x;
  std::memcpy(&x, &bits, 8);
  return x;
}

}  // namespace

void write_signal(const std::string& path, const std::vector<cplx>& samples) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot open for writing: " + path);
  for (const cplx& s : samples) {
    put_f64(out, s.real());
    put_f64(out, s.imag());
  }
  out.flush();
  if (!out) throw data_error("write failed: " + path);
}

std::vector<cplx> read_signal(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw data_error("cannot open for reading: " + path);
  const std::streamoff bytes = in.tellg();
  if (bytes % 16 != 0) {
    throw data_error("truncated signal file (size not a multiple of 16 bytes): " + path);
  }
  in.seekg(0);

  std::vector<char> raw(static_cast<std::size_t>(bytes));
  if (bytes > 0) in.read(raw.data(), bytes);
  if (!in) throw data_error("read failed: " + path);

  std::vector<cplx> samples(static_cast<std::size_t>(bytes) / 16);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    samples[i] = cplx(get_f64(raw.data() + 16 * i), get_f64(raw.data() + 16 * i + 8));
  }
  return samples;
}

}  // namespace zesprit
