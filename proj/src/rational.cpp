#include "emkv/rational.hpp"

#include <algorithm>

namespace emkv {

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.matrix = m;
  QMatrix& a = res.matrix;
  int lead = 0;
  for (int col = 0; col < a.cols && lead < a.rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < a.rows; ++r) {
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    }
    Rational inv = Rational(1) / a.at(lead, col);
    for (int c = col; c < a.cols; ++c) a.at(lead, c) *= inv;
    for (int r = 0; r < a.rows; ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Rational f = a.at(r, col);
      for (int c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  return res;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Rational> v(m.cols);
    v[j] = Rational(1);
    for (size_t i = 0; i < r.pivots.size(); ++i) {
      v[r.pivots[i]] = -r.matrix.at(static_cast<int>(i), j);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace emkv
