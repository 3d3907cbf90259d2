#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace mlingam {

// splitmix64 finalizer; used for stream derivation and engine seeding.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Names one reproducible random sequence. Equal (seed, stream) values give
// bit-identical draw sequences; derive(id) splits off an independent child
// stream, so concurrent work units can own disjoint sequences under one seed.
struct RngStream {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  [[nodiscard]] RngStream derive(std::uint64_t id) const noexcept {
    return {seed, mix64(stream ^ mix64(id))};
  }

  friend bool operator==(const RngStream&, const RngStream&) = default;
};

namespace detail {

// Ziggurat tables for the standard normal (Marsaglia & Tsang layout,
// 128 strips of area 9.91256303526217e-3, tail start 3.442619855899).
struct ZigguratTables {
  static constexpr double kR = 3.442619855899;
  double wn[128];
  double fn[128];
  double kn[128];

  ZigguratTables() {
    constexpr double v = 9.91256303526217e-3;
    double dn = kR;
    double tn = kR;
    const double q = v / std::exp(-0.5 * kR * kR);
    kn[0] = kR / q;
    kn[1] = 0.0;
    wn[0] = q;
    wn[127] = kR;
    fn[0] = 1.0;
    fn[127] = std::exp(-0.5 * kR * kR);
    for (int i = 126; i >= 1; --i) {
      dn = std::sqrt(-2.0 * std::log(v / dn + std::exp(-0.5 * dn * dn)));
      kn[i + 1] = dn / tn;
      tn = dn;
      fn[i] = std::exp(-0.5 * dn * dn);
      wn[i] = dn;
    }
  }
};

inline const ZigguratTables& ziggurat() {
  static const ZigguratTables tables;
  return tables;
}

}  // namespace detail

// Draw engine bound to one stream (xoshiro256++ core seeded through
// splitmix64). Not thread-safe; each thread owns its own.
class Rng {
 public:
  explicit Rng(RngStream s) {
    std::uint64_t x = mix64(s.seed ^ 0x7c1592d1e3c2a0f5ULL) ^
                      mix64(mix64(s.stream ^ 0x164dcca9c3460e5bULL));
    for (auto& word : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on the open interval (0, 1); never exactly 0 or 1, so log() of a
  // draw is always finite.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the ziggurat method.
  double normal() {
    const auto& t = detail::ziggurat();
    for (;;) {
      const std::uint64_t u = next_u64();
      const int i = static_cast<int>(u & 127);
      const double hz =
          static_cast<double>(static_cast<std::int64_t>(u >> 11) - (std::int64_t{1} << 52)) *
          0x1.0p-52;  // signed fraction in [-1, 1)
      const double x = hz * t.wn[i];
      if (std::abs(hz) < t.kn[i]) return x;
      if (i == 0) {
        // Tail beyond R: Marsaglia's exponential wrap.
        double xx, yy;
        do {
          xx = -std::log(uniform()) / detail::ZigguratTables::kR;
          yy = -std::log(uniform());
        } while (yy + yy < xx * xx);
        return hz > 0 ? detail::ZigguratTables::kR + xx : -(detail::ZigguratTables::kR + xx);
      }
      if (t.fn[i] + uniform() * (t.fn[i - 1] - t.fn[i]) < std::exp(-0.5 * x * x)) return x;
    }
  }

  double exponential() { return -std::log(uniform()); }

  double laplace(double mean, double scale) {
    const double q = uniform() - 0.5;  // (-0.5, 0.5)
    const double mag = -std::log(1.0 - 2.0 * std::abs(q));
    return mean + (q < 0.0 ? -scale : scale) * mag;
  }

  // Chi-squared with integer degrees of freedom, as a sum of squared normals.
  double chi_squared(int nu) {
    if (nu < 1) throw std::invalid_argument("chi_squared: nu must be >= 1");
    double acc = 0.0;
    for (int k = 0; k < nu; ++k) {
      const double z = normal();
      acc += z * z;
    }
    return acc;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace mlingam
