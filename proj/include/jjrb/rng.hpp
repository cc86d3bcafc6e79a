#ifndef JJRB_RNG_HPP
#define JJRB_RNG_HPP

#include <cstdint>
#include <vector>

#include "jjrb/rational.hpp"

namespace jjrb {

/// Small fixed-seed generator (splitmix64) so that randomized suites are
/// reproducible byte-for-byte across runs and platforms.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  /// Uniform pick from the sample scalar set used throughout the suites.
  Rational sample_scalar() {
    static const Rational kValues[] = {Rational(-2), Rational(-1),   Rational(1),
                                       Rational(2),  Rational(1, 2), Rational(3)};
    return kValues[below(6)];
  }

  /// Like sample_scalar but may also return 0.
  Rational sample_scalar_or_zero() {
    std::size_t pick = below(7);
    return pick == 6 ? Rational(0) : sample_scalar_at(pick);
  }

 private:
  Rational sample_scalar_at(std::size_t i) {
    static const Rational kValues[] = {Rational(-2), Rational(-1),   Rational(1),
                                       Rational(2),  Rational(1, 2), Rational(3)};
    return kValues[i];
  }

  std::uint64_t state_;
};

}  // namespace jjrb

#endif
