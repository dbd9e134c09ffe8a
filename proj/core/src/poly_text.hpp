#pragma once

// Shared text rendering for sparse polynomials over named variables.

#include <map>
#include <string>
#include <vector>

#include "eulerops/multi_index.hpp"
#include "eulerops/rational.hpp"

namespace eulerops::detail {

inline std::string render_monomial(const MultiIndex& key, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (key[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (key[i] > 1) out += '^' + std::to_string(key[i]);
  }
  return out;
}

inline std::string render_polynomial(const std::map<MultiIndex, Rational, GradedLex>& terms,
                                     const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const bool negative = coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = negative ? -coeff : coeff;
    const std::string mono = render_monomial(key, names);
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + '*' + mono;
    }
  }
  return out;
}

}  // namespace eulerops::detail
