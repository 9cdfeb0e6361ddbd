#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "lqel/scalar.hpp"

namespace lqel {

// Signed product of basis units: e_i * e_j = sign * e_index. The table is
// the oriented-triple one: (1,2,3), (1,4,5), (1,7,6), (2,4,6), (2,5,7),
// (3,4,7), (3,6,5), each cyclic, units anticommuting otherwise, and
// e_i^2 = -1 for i >= 1.
std::pair<int, std::size_t> octonion_basis_mul(std::size_t i, std::size_t j);

struct Octonion {
  std::array<Scalar, 8> c{};

  static Octonion unit(std::size_t k) {
    Octonion o;
    o.c[k] = Scalar(1);
    return o;
  }

  Octonion conj() const {
    Octonion o;
    o.c[0] = c[0];
    for (std::size_t k = 1; k < 8; ++k) o.c[k] = -c[k];
    return o;
  }

  // Bilinear norm form: sum of squared components.
  Scalar norm() const {
    Scalar s(0);
    for (const auto& x : c) s += x * x;
    return s;
  }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (std::size_t k = 0; k < 8; ++k) o.c[k] = a.c[k] + b.c[k];
    return o;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion o;
    for (std::size_t k = 0; k < 8; ++k) o.c[k] = a.c[k] - b.c[k];
    return o;
  }
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) {
    return a.c == b.c;
  }
};

}  // namespace lqel
