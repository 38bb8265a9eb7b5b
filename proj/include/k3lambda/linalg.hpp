#ifndef K3LAMBDA_LINALG_HPP
#define K3LAMBDA_LINALG_HPP

#include "k3lambda/rational.hpp"

#include <vector>

namespace k3 {

using RatRow = std::vector<Rat>;
using RatMat = std::vector<RatRow>;

/// In-place reduced row echelon form with leftmost-pivot selection.
/// Returns the pivot column indices, so rank = pivots.size().
inline std::vector<size_t> rref(RatMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(RatMat m) { return rref(m).size(); }

/// Reduce v against an rref basis; v is modified to the normal form.
inline void reduce_against(const RatMat& rrefm, const std::vector<size_t>& pivots, RatRow& v) {
  for (size_t k = 0; k < pivots.size(); ++k) {
    size_t c = pivots[k];
    if (v[c] == 0) continue;
    Rat f = v[c];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rrefm[k][j];
  }
}

inline Rat det4(const std::array<std::array<Rat, 4>, 4>& a) {
  RatMat m(4, RatRow(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m[i][j] = a[i][j];
  Rat d = 1;
  for (int c = 0; c < 4; ++c) {
    int sel = -1;
    for (int r = c; r < 4; ++r)
      if (m[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      std::swap(m[sel], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = 1 / m[c][c];
    for (int j = c; j < 4; ++j) m[c][j] *= inv;
    for (int r = c + 1; r < 4; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j < 4; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return d;
}

} // namespace k3

#endif
