#ifndef MUSTAFIN_RNG_HPP
#define MUSTAFIN_RNG_HPP

#include <cstdint>

namespace mustafin {

/// Deterministic splitmix64; identical streams across platforms so that
/// equal seeds give byte-identical reports.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [lo, hi] inclusive
  int range(int lo, int hi) {
    return lo + (int)(next() % (uint64_t)(hi - lo + 1));
  }

 private:
  uint64_t state_;
};

}  // namespace mustafin

#endif
