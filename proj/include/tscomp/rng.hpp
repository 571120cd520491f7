#pragma once

#include <cstdint>
#include <random>

namespace tscomp::detail {

/// splitmix64 step; used to derive independent sub-stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = master ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL);
  splitmix64(s);
  return splitmix64(s);
}

/// Deterministic standard-normal source. Uniforms are built from raw
/// mt19937_64 output and mapped via Box-Muller, so streams are identical
/// across standard libraries for a given seed.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  // uniform in (0, 1]
  double uniform_open() { return static_cast<double>((eng_() >> 11) + 1) * 0x1.0p-53; }

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tscomp::detail
