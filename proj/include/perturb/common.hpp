#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace perturb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

// thrown when an integral transform has no finite value for the given modulus
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// thrown when a matrix does not satisfy the invariants of its declared class
struct ClassError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// thrown when a frequency cutoff is too small to hold the requested kernel
struct TruncationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// thrown when a spectrum does not fit the periodization window
struct WindowError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// per-trial stream derivation: trial t sees the same stream whether trials
// run serially or in parallel
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base ^ (0xD1B54A32D192ED03ULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

// Small deterministic generator. The standard distributions are
// implementation-defined, so uniforms and normals are produced explicitly to
// keep reports reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cache_ = r * std::sin(2.0 * kPi * u2);
    have_cache_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) / std::sqrt(2.0);
  }

 private:
  std::uint64_t state_;
  double cache_ = 0.0;
  bool have_cache_ = false;
};

int thread_budget();  // respects PERTURB_THREADS

// static partition; fn(i) must be safe to run concurrently for distinct i
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace perturb
