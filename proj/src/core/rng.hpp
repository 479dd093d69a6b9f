#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>

namespace maxloc {

// Counter-based generator (Philox4x32-10). Every 128-bit output block is a
// pure function of (key, counter), so the stream for a given replicate can
// be produced in any order, on any worker, with no shared state.
namespace philox {

inline constexpr std::uint32_t kMult0 = 0xD2511F53u;
inline constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

using Block = std::array<std::uint32_t, 4>;

inline Block encrypt(Block ctr, std::uint32_t k0, std::uint32_t k1) {
  for (int round = 0;; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ k0,
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ k1,
           static_cast<std::uint32_t>(p0)};
    if (round == 9) return ctr;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
}

}  // namespace philox

// Substream ids. They live in the counter, alongside the replicate index,
// so streams for distinct (replicate, substream) pairs never overlap.
namespace substream {
inline constexpr std::uint32_t increments = 0;      // one-sided path / positive half
inline constexpr std::uint32_t increments_neg = 1;  // negative half of two-sided paths
inline constexpr std::uint32_t ou = 2;              // stationary init + innovations
inline constexpr std::uint32_t bridge_base = 16;    // + refinement level
}  // namespace substream

// Maps 64 uniform bits to a double in [0, 1).
inline double uniform53(std::uint32_t lo, std::uint32_t hi) {
  const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic stream of standard normal deviates for one
// (master_seed, replicate, substream) triple. Deviates (2i, 2i+1) come from
// counter block i via Box-Muller, so the stream supports random access.
class NormalStream {
 public:
  NormalStream(std::uint64_t master_seed, std::uint32_t replicate, std::uint32_t substream_id)
      : k0_(static_cast<std::uint32_t>(master_seed)),
        k1_(static_cast<std::uint32_t>(master_seed >> 32)),
        replicate_(replicate),
        substream_(substream_id) {}

  std::array<double, 2> pair(std::uint64_t block_index) const {
    const philox::Block out = philox::encrypt(
        {static_cast<std::uint32_t>(block_index),
         static_cast<std::uint32_t>(block_index >> 32), replicate_, substream_},
        k0_, k1_);
    // 1-u lies in (0,1], so the log argument never vanishes.
    const double u = uniform53(out[0], out[1]);
    const double v = uniform53(out[2], out[3]);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u));
    const double ang = 2.0 * kPi * v;
    return {r * std::cos(ang), r * std::sin(ang)};
  }

  double operator[](std::uint64_t i) const { return pair(i >> 1)[i & 1]; }

  void fill(std::span<double> out, std::uint64_t first_index = 0) const {
    std::uint64_t i = first_index;
    std::size_t written = 0;
    if ((i & 1) != 0 && written < out.size()) {
      out[written++] = (*this)[i];
      ++i;
    }
    while (written + 2 <= out.size()) {
      const auto p = pair(i >> 1);
      out[written] = p[0];
      out[written + 1] = p[1];
      written += 2;
      i += 2;
    }
    if (written < out.size()) out[written] = (*this)[i];
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::uint32_t k0_, k1_, replicate_, substream_;
};

}  // namespace maxloc
