#include "tmotive/matrix.hpp"

namespace tmotive {

namespace {
int64_t inv_mod(int64_t x, int64_t p) {
  int64_t a = p, b = ((x % p) + p) % p, u0 = 0, u1 = 1;
  while (b) {
    int64_t t = a / b;
    a -= t * b;
    std::swap(a, b);
    u0 -= t * u1;
    std::swap(u0, u1);
  }
  return ((u0 % p) + p) % p;
}
}  // namespace

std::vector<int> rref_fp(FpMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) % m.p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    int64_t f = inv_mod(m.at(row, col), m.p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * f % m.p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      int64_t c = ((m.at(i, col) % m.p) + m.p) % m.p;
      if (c == 0) continue;
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - c * m.at(row, j)) % m.p + m.p) % m.p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<int64_t>> kernel_fp(FpMat m) {
  for (auto& x : m.a) x = ((x % m.p) + m.p) % m.p;
  std::vector<int> pivots = rref_fp(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<int64_t>> basis;
  for (int freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<int64_t> v(m.cols, 0);
    v[freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = ((-m.at((int)r, freec)) % m.p + m.p) % m.p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tmotive
