#ifndef LEONOMA_RNG_HPP
#define LEONOMA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace leonoma {

// splitmix64 increment/finalizer (Steele, Lea, Flood 2014). Used both as the
// generator and to derive independent substreams from (seed, trial, tag), so
// simulation results do not depend on thread count or evaluation order.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(splitmix64_mix(seed ^ 0xA02B0C5B395EA1DDULL)) {}

  static RngStream substream(std::uint64_t master, std::uint64_t index, std::uint64_t tag) {
    return RngStream(splitmix64_mix(master) ^ splitmix64_mix(index + 0x632BE59BD9B4E019ULL) ^
                     splitmix64_mix(tag + 0x9E6C63D0876A9ULL));
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1); never returns 0 so logs are safe.
  double uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  // Gamma(shape k integer, rate) as a sum of exponentials; fading shapes are
  // integer by construction.
  double erlang(int k, double rate) {
    double prod = 1.0;
    for (int i = 0; i < k; ++i) prod *= uniform();
    return -std::log(prod) / rate;
  }

  // Knuth's product method, chunked so the running product never underflows.
  int poisson(double mean) {
    int total = 0;
    double remaining = mean;
    while (remaining > 0.0) {
      const double chunk = remaining > 30.0 ? 30.0 : remaining;
      remaining -= chunk;
      const double limit = std::exp(-chunk);
      double prod = uniform();
      while (prod > limit) {
        ++total;
        prod *= uniform();
      }
    }
    return total;
  }

 private:
  std::uint64_t state_;
};

}  // namespace leonoma

#endif
