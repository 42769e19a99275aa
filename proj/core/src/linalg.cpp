#include "operlab/linalg.hpp"

namespace operlab {

namespace {

template <class R>
R cofactor_det(const Mat<R>& m, std::vector<size_t> rs, std::vector<size_t> cs) {
  if (rs.size() == 1) return m.at(rs[0], cs[0]);
  R acc = ring_zero(m.at(0, 0));
  for (size_t i = 0; i < rs.size(); ++i) {
    std::vector<size_t> rs2;
    rs2.reserve(rs.size() - 1);
    for (size_t t = 0; t < rs.size(); ++t)
      if (t != i) rs2.push_back(rs[t]);
    std::vector<size_t> cs2(cs.begin() + 1, cs.end());
    R term = m.at(rs[i], cs[0]) * cofactor_det(m, rs2, cs2);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

template <class R>
R det_impl(const Mat<R>& m) {
  std::vector<size_t> idx(m.n());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return cofactor_det(m, idx, idx);
}

}  // namespace

FieldElem field_det(const Mat<FieldElem>& m) { return det_impl(m); }
WittElem witt_det(const Mat<WittElem>& m) { return det_impl(m); }

Mat<FieldElem> field_inverse(const Mat<FieldElem>& m) {
  size_t n = m.n();
  Mat<FieldElem> a = m;
  Mat<FieldElem> inv = Mat<FieldElem>::identity(n, m.at(0, 0));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(errc::singular_matrix, "matrix is not invertible");
    if (pivot != col)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    FieldElem s = a.at(col, col).inverse();
    for (size_t j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * s;
      inv.at(col, j) = inv.at(col, j) * s;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      FieldElem f = a.at(i, col);
      for (size_t j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace operlab
