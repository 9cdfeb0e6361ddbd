#include "lqel/octonion.hpp"

namespace lqel {

namespace {

struct MulTable {
  int sign[8][8];
  std::size_t index[8][8];

  MulTable() {
    constexpr std::size_t lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6},
                                         {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                                         {3, 6, 5}};
    for (std::size_t j = 0; j < 8; ++j) {
      sign[0][j] = sign[j][0] = 1;
      index[0][j] = index[j][0] = j;
    }
    for (std::size_t k = 1; k < 8; ++k) {
      sign[k][k] = -1;
      index[k][k] = 0;
    }
    for (const auto& t : lines) {
      const std::size_t a = t[0], b = t[1], c = t[2];
      sign[a][b] = sign[b][c] = sign[c][a] = 1;
      index[a][b] = c;
      index[b][c] = a;
      index[c][a] = b;
      sign[b][a] = sign[c][b] = sign[a][c] = -1;
      index[b][a] = c;
      index[c][b] = a;
      index[a][c] = b;
    }
  }
};

const MulTable& table() {
  static const MulTable t;
  return t;
}

}  // namespace

std::pair<int, std::size_t> octonion_basis_mul(std::size_t i, std::size_t j) {
  return {table().sign[i][j], table().index[i][j]};
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion o;
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      if (b.c[j].is_zero()) continue;
      const auto [sign, k] = octonion_basis_mul(i, j);
      Scalar term = a.c[i] * b.c[j];
      if (sign < 0) term = -term;
      o.c[k] += term;
    }
  }
  return o;
}

}  // namespace lqel
