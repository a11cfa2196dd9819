#pragma once

#include <cstdint>
#include <vector>

#include "realform/scalar.hpp"

namespace realform {

/// Deterministic splitmix64-based sampler. Every randomized check in the
/// project draws from one of these, seeded explicitly, so reports are
/// reproducible bit for bit.
class Sampler {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eed5eedULL;

  explicit Sampler(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  /// Small rational with numerator in [-bound, bound] and denominator in
  /// [1, den_bound].
  Rat rational(long bound = 6, long den_bound = 3) {
    Rat q(integer(-bound, bound), integer(1, den_bound));
    q.canonicalize();
    return q;
  }

  Rat nonzero_rational(long bound = 6, long den_bound = 3) {
    for (;;) {
      Rat q = rational(bound, den_bound);
      if (q != 0) return q;
    }
  }

  Scalar scalar(long bound = 6, long den_bound = 3) {
    return Scalar(rational(bound, den_bound), rational(bound, den_bound));
  }

  Scalar nonzero_scalar(long bound = 6, long den_bound = 3) {
    for (;;) {
      Scalar s = scalar(bound, den_bound);
      if (!s.is_zero()) return s;
    }
  }

  std::vector<Scalar> scalar_vector(std::size_t n, long bound = 6,
                                    long den_bound = 3) {
    std::vector<Scalar> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k) v.push_back(scalar(bound, den_bound));
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace realform
