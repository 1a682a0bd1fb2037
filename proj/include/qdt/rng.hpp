#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace qdt {

// splitmix64 step; used to whiten (seed, stream, index) triples into engine
// seeds so every sample owns an independent substream.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ (stream + 0x9E3779B97F4A7C15ULL));
  h = splitmix64(h ^ (index + 0xD1B54A32D192ED03ULL));
  return h;
}

// Deterministic generator. mt19937_64 output is pinned by the standard, and
// the uniform/gaussian transforms below are explicit, so streams are
// bit-identical across standard libraries (the std:: distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform double in [0, 1) with 53 random mantissa bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1 always
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  std::size_t index(std::size_t n) {  // uniform in [0, n)
    return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
  }

  // Isotropic point on the unit sphere of C^dim.
  std::vector<std::complex<double>> unit_complex_vector(std::size_t dim) {
    std::vector<std::complex<double>> z(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& v : z) {
        v = {gaussian(), gaussian()};
        norm2 += std::norm(v);
      }
    } while (norm2 <= 0.0);
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& v : z) v *= scale;
    return z;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace qdt
