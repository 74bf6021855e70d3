#pragma once

// The growth function f(x) = 2^(c (log2 x)^(2/3)) and eps(n) = (log2 n)^(-1/3).

#include <cmath>
#include <cstddef>
#include <string>

#include "p5hom/error.hpp"

namespace p5hom {

struct GrowthFunction {
  long double c = 1.0L / 16.0L;

  // f(x) for x >= 1; below 1 there is no nonempty cograph to promise, so 0.
  long double f(long double x) const {
    if (std::isnan(x) || x < 0) throw PreconditionError("growth function: negative argument");
    if (x < 1) return 0;
    return std::exp2(c * std::pow(std::log2(x), 2.0L / 3.0L));
  }

  long double eps(long double n) const {
    if (!(n > 1)) throw PreconditionError("growth function: eps needs n > 1");
    return 1.0L / std::cbrt(std::log2(n));
  }

  // n^(1 - eps(n)^2), the size below which the iteration stops removing.
  long double iteration_slack(long double n) const {
    const long double e = eps(n);
    return std::pow(n, 1 - e * e);
  }
};

// "1/16", "0.0625" or "1e-1"; must be positive and finite.
inline long double parse_growth_constant(const std::string& text) {
  long double value = 0;
  try {
    std::size_t used = 0;
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      long double num = std::stold(text.substr(0, slash), &used);
      if (used != slash) throw ParseError("");
      const std::string den_text = text.substr(slash + 1);
      long double den = std::stold(den_text, &used);
      if (used != den_text.size()) throw ParseError("");
      value = num / den;
    } else {
      value = std::stold(text, &used);
      if (used != text.size()) throw ParseError("");
    }
  } catch (...) {
    throw ParseError("growth constant: cannot parse '" + text + "'");
  }
  if (!(value > 0) || !std::isfinite(value)) throw ParseError("growth constant must be positive");
  return value;
}

}  // namespace p5hom
