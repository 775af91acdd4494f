#ifndef ECGROUP_RNG_HPP
#define ECGROUP_RNG_HPP

#include <cstdint>

#include "ecgroup/bigint.hpp"

namespace ecgroup {

// splitmix64. Deterministic across platforms, which matters more here
// than statistical strength: every randomized suite logs its seed and a
// replay must reproduce the exact trial stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  // Uniform nonnegative Int with `bits` random bits.
  Int bits(unsigned bits) {
    Int r = 0;
    unsigned got = 0;
    while (got < bits) {
      unsigned take = bits - got < 64 ? bits - got : 64;
      std::uint64_t w = next() & (take == 64 ? ~0ull : ((1ull << take) - 1));
      r <<= take;
      r += Int(static_cast<unsigned long>(w));
      got += take;
    }
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ecgroup

#endif  // ECGROUP_RNG_HPP
