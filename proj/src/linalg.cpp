/* SPDX-License-Identifier: Apache-2.0 */
#include "ipart/linalg.hpp"

#include <utility>

namespace ipart {

namespace {

using Matrix = std::vector<std::vector<mpq_class>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const mpq_class inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<mpq_class>> solve_combination(const std::vector<ExponentVec>& vectors,
                                                        const ExponentVec& target) {
  const std::size_t k = vectors.size(), n = target.rank();
  // one equation per coordinate, unknowns are the coefficients
  Matrix m(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = vectors[j][i];
    m[i][k] = target[i];
  }
  const auto pivots = reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  std::vector<mpq_class> c(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = m[r][k];
  return c;
}

std::size_t rank_of(const std::vector<ExponentVec>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m;
  for (const auto& v : vectors) m.push_back(v.coords());
  return reduce(m, vectors.front().rank()).size();
}

bool same_span(const std::vector<ExponentVec>& a, const std::vector<ExponentVec>& b) {
  for (const auto& v : a)
    if (!solve_combination(b, v)) return false;
  for (const auto& v : b)
    if (!solve_combination(a, v)) return false;
  return true;
}

}  // namespace ipart
