#pragma once

/**
 * @file algebra.hpp
 * @brief Parameters (alpha, beta) selecting a generalized quaternion algebra
 *        H(alpha,beta), with the five named presets.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacquat/rational.hpp"

namespace jacquat {

struct AlgebraParams {
  Rational alpha;
  Rational beta;
  std::optional<std::string> preset_name;  // label only; identity is (alpha, beta)

  static AlgebraParams real() { return {Rational(1), Rational(1), "real"}; }
  static AlgebraParams split() { return {Rational(1), Rational(-1), "split"}; }
  static AlgebraParams semi() { return {Rational(1), Rational(0), "semi"}; }
  static AlgebraParams split_semi() { return {Rational(-1), Rational(0), "split-semi"}; }
  static AlgebraParams quarter() { return {Rational(0), Rational(0), "quarter"}; }

  /// All five presets, in the paper's order.
  static const std::vector<AlgebraParams>& presets();

  /// Lookup by preset name; accepts "split-semi" and "split_semi".
  static std::optional<AlgebraParams> from_preset(std::string_view name);

  /// Custom (alpha, beta); attaches the preset label when the pair matches one.
  static AlgebraParams custom(Rational alpha, Rational beta);

  /// "H(1,-1) [split]" or "H(2/3,-5)".
  std::string label() const;

  friend bool operator==(const AlgebraParams& p, const AlgebraParams& q) {
    return p.alpha == q.alpha && p.beta == q.beta;
  }
};

inline bool same_algebra(const AlgebraParams& p, const AlgebraParams& q) { return p == q; }

}  // namespace jacquat
