#pragma once

// Deterministic generators for randomized exact-arithmetic tests.

#include <cstdint>

#include <jacquat/algebra.hpp>
#include <jacquat/eisenstein.hpp>
#include <jacquat/quaternion.hpp>
#include <jacquat/rational.hpp>

namespace testgen {

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  jacquat::Rational rational(long max_num = 20, long max_den = 6) {
    return jacquat::Rational(range(-max_num, max_num), range(1, max_den));
  }

  jacquat::Eisenstein eisenstein() {
    return jacquat::Eisenstein(rational(), rational());
  }

  jacquat::AlgebraParams params() {
    return jacquat::AlgebraParams::custom(rational(8, 4), rational(8, 4));
  }

  jacquat::QuaternionR quaternion(const jacquat::AlgebraParams& p) {
    return jacquat::QuaternionR(p, rational(), rational(), rational(), rational());
  }

 private:
  std::uint64_t state_;
};

}  // namespace testgen
