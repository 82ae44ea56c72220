#include "jacquat/algebra.hpp"

namespace jacquat {

const std::vector<AlgebraParams>& AlgebraParams::presets() {
  static const std::vector<AlgebraParams> all = {
      real(), split(), semi(), split_semi(), quarter()};
  return all;
}

std::optional<AlgebraParams> AlgebraParams::from_preset(std::string_view name) {
  std::string key(name);
  for (auto& c : key)
    if (c == '_') c = '-';
  for (const auto& p : presets())
    if (p.preset_name && *p.preset_name == key) return p;
  return std::nullopt;
}

AlgebraParams AlgebraParams::custom(Rational alpha, Rational beta) {
  AlgebraParams out{std::move(alpha), std::move(beta), std::nullopt};
  for (const auto& p : presets())
    if (p == out) {
      out.preset_name = p.preset_name;
      break;
    }
  return out;
}

std::string AlgebraParams::label() const {
  std::string out = "H(" + alpha.str() + "," + beta.str() + ")";
  if (preset_name) out += " [" + *preset_name + "]";
  return out;
}

}  // namespace jacquat
