#include "nematic2d/snapshot_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "nematic2d/errors.hpp"

namespace nematic2d {

namespace {

constexpr char kMagic[8] = {'N', 'E', 'M', '2', 'D', 'V', '0', '1'};

void put_u64(std::vector<unsigned char>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double d) {
  put_u64(out, std::bit_cast<uint64_t>(d));
}

uint64_t get_u64(const unsigned char* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
  return v;
}

double get_f64(const unsigned char* p) { return std::bit_cast<double>(get_u64(p)); }

}  // namespace

void write_snapshot(const FlowState& state, DirectorMode mode, const std::string& path) {
  const int n = state.u.n();
  std::vector<unsigned char> buf;
  buf.reserve(8 + 8 + 8 + 8 + 1 + sizeof(double) * (state.u.size() + state.d.size()));
  buf.insert(buf.end(), kMagic, kMagic + 8);
  put_u64(buf, static_cast<uint64_t>(n));
  put_f64(buf, state.u.grid().length());
  put_f64(buf, state.t);
  buf.push_back(mode == DirectorMode::projection ? 0 : 1);
  for (int c = 0; c < 2; ++c)
    for (double v : state.u.comp(c)) put_f64(buf, v);
  for (int c = 0; c < 3; ++c)
    for (double v : state.d.comp(c)) put_f64(buf, v);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("short write to '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  const size_t header = 8 + 8 + 8 + 8 + 1;
  if (buf.size() < header) throw IoError("short read: '" + path + "' truncated inside the header");
  if (std::memcmp(buf.data(), kMagic, 8) != 0)
    throw IoError("'" + path + "' is not a snapshot (magic mismatch)");

  uint64_t n64 = get_u64(buf.data() + 8);
  if (n64 < 8 || n64 > (1u << 20) || n64 % 2 != 0)
    throw IoError("'" + path + "' declares an unusable grid size " + std::to_string(n64));
  const int n = static_cast<int>(n64);
  double L = get_f64(buf.data() + 16);
  double t = get_f64(buf.data() + 24);
  unsigned char mode_flag = buf[32];
  if (mode_flag > 1) throw IoError("'" + path + "' has an unknown mode flag");

  const size_t cells = static_cast<size_t>(n) * n;
  const size_t expected = header + sizeof(double) * cells * 5;
  if (buf.size() < expected)
    throw IoError("short read: '" + path + "' holds " + std::to_string(buf.size()) + " bytes, need " +
                  std::to_string(expected));
  if (buf.size() > expected) throw IoError("'" + path + "' has trailing bytes beyond the arrays");

  TorusGrid grid(n, L);
  Snapshot snap{FlowState::zeros(grid), mode_flag == 0 ? DirectorMode::projection : DirectorMode::ginzburg_landau};
  snap.state.t = t;
  const unsigned char* p = buf.data() + header;
  for (int c = 0; c < 2; ++c)
    for (double& v : snap.state.u.comp(c)) {
      v = get_f64(p);
      p += 8;
    }
  for (int c = 0; c < 3; ++c)
    for (double& v : snap.state.d.comp(c)) {
      v = get_f64(p);
      p += 8;
    }
  return snap;
}

}  // namespace nematic2d
