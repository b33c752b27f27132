#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace padicla {

// Seeded generator for fixtures and property suites. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; the
// standard distributions are not, so all reductions are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  // Uniform in [0, n) for a big modulus, drawn 64 bits at a time.
  mpz_class below(const mpz_class& n) {
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x;
    do {
      x = 0;
      for (std::size_t got = 0; got < bits; got += 64) {
        x <<= 64;
        mpz_class word;
        const std::uint64_t w = engine_();
        mpz_import(word.get_mpz_t(), 1, 1, sizeof w, 0, 0, &w);
        x += word;
      }
      x >>= static_cast<mp_bitcnt_t>((bits + 63) / 64 * 64 - bits);
    } while (x >= n);
    return x;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace padicla
