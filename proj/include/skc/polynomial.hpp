#pragma once

#include <string>
#include <vector>

#include "skc/rational.hpp"

namespace skc {

// Integer-coefficient polynomial in n, coefficients ascending by degree.
struct Polynomial {
  std::vector<long> coeffs;

  Integer eval(long n) const {
    Integer acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = acc * n + coeffs[i];
    return acc;
  }

  int degree() const {
    for (std::size_t i = coeffs.size(); i-- > 0;)
      if (coeffs[i] != 0) return static_cast<int>(i);
    return 0;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      if (coeffs[i] == 0 && !(coeffs.empty() && i == 0)) continue;
      if (!s.empty()) s += coeffs[i] < 0 ? " - " : " + ";
      else if (coeffs[i] < 0) s += "-";
      const long a = coeffs[i] < 0 ? -coeffs[i] : coeffs[i];
      if (a != 1 || i == 0) s += std::to_string(a);
      if (i >= 1) s += "n";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }
};

}  // namespace skc
