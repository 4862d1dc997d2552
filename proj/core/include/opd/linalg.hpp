#pragma once

#include <cstddef>
#include <vector>

#include "opd/rational.hpp"

namespace opd {

// Dense row-major matrix over Q, just enough for rank / echelon / nullspace
// work on small relation spaces.
using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;

// Reduced row echelon form in place; returns pivot column indices in order.
inline std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  return pivots;
}

inline int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

// Basis of the right nullspace, one row per free column, deterministic:
// free columns in increasing order, each vector has entry 1 at its free column.
inline QMatrix nullspace(QMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  QMatrix basis;
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    QRow v(cols, Rational(0));
    v[col] = 1;
    for (std::size_t pc = 0; pc < cols; ++pc) {
      int pr = pivot_of_col[pc];
      if (pr >= 0) v[pc] = -m[pr][col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// True if v lies in the row span of m.
inline bool in_row_span(const QMatrix& m, const QRow& v) {
  QMatrix ext = m;
  int base = rank(m);
  ext.push_back(v);
  return rank(ext) == base;
}

}  // namespace opd
