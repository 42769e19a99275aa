#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "operlab/error.hpp"
#include "operlab/rings.hpp"

namespace operlab {

inline FieldElem ring_zero(const FieldElem& x) { return x.field()->zero(); }
inline FieldElem ring_one(const FieldElem& x) { return x.field()->one(); }
inline WittElem ring_zero(const WittElem& x) { return WittElem(x.p(), x.length(), 0); }
inline WittElem ring_one(const WittElem& x) { return WittElem(x.p(), x.length(), 1); }

// Dense square matrix over an exact commutative ring (FieldElem or WittElem).
template <class R>
class Mat {
 public:
  Mat(size_t n, const R& fill) : n_(n), a_(n * n, fill) {
    if (n == 0) fail(errc::validation, "empty matrix");
  }

  static Mat identity(size_t n, const R& exemplar) {
    Mat m(n, ring_zero(exemplar));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ring_one(exemplar);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<R>>& rows) {
    size_t n = rows.size();
    if (n == 0 || rows[0].size() != n) fail(errc::validation, "matrix must be square");
    Mat m(n, rows[0][0]);
    for (size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) fail(errc::validation, "ragged matrix rows");
      for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t n() const { return n_; }
  R& at(size_t i, size_t j) { return a_[i * n_ + j]; }
  const R& at(size_t i, size_t j) const { return a_[i * n_ + j]; }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (n_ != o.n_) fail(errc::validation, "matrix size mismatch");
    Mat r(n_, ring_zero(a_[0]));
    for (size_t i = 0; i < n_; ++i)
      for (size_t k = 0; k < n_; ++k)
        for (size_t j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    return r;
  }
  Mat scaled(const R& c) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * c;
    return r;
  }
  Mat pow(uint64_t e) const {
    Mat r = identity(n_, a_[0]);
    Mat b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }
  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  R trace() const {
    R t = ring_zero(a_[0]);
    for (size_t i = 0; i < n_; ++i) t = t + at(i, i);
    return t;
  }

 private:
  size_t n_;
  std::vector<R> a_;
};

// Coefficients c_0..c_n (constant first) of det(tI - M); c_n = 1.
template <class R>
std::vector<R> char_poly_coeffs(const Mat<R>& m) {
  size_t n = m.n();
  R zero = ring_zero(m.at(0, 0)), one = ring_one(m.at(0, 0));
  using PolyV = std::vector<R>;  // constant-first
  auto pmul = [&](const PolyV& a, const PolyV& b) {
    PolyV r(a.size() + b.size() - 1, zero);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
  };
  // Laplace expansion along the first remaining column; n stays tiny here.
  struct Ctx {
    const Mat<R>& m;
    const R& zero;
    const R& one;
  } ctx{m, zero, one};
  std::function<PolyV(const std::vector<size_t>&, const std::vector<size_t>&)> det =
      [&](const std::vector<size_t>& rs, const std::vector<size_t>& cs) -> PolyV {
    auto entry = [&](size_t i, size_t j) {
      PolyV v = {zero - ctx.m.at(i, j)};
      if (i == j) v.push_back(one);
      return v;
    };
    if (rs.size() == 1) return entry(rs[0], cs[0]);
    PolyV acc = {zero};
    for (size_t i = 0; i < rs.size(); ++i) {
      std::vector<size_t> rs2;
      rs2.reserve(rs.size() - 1);
      for (size_t t = 0; t < rs.size(); ++t)
        if (t != i) rs2.push_back(rs[t]);
      std::vector<size_t> cs2(cs.begin() + 1, cs.end());
      PolyV term = pmul(entry(rs[i], cs[0]), det(rs2, cs2));
      if (acc.size() < term.size()) acc.resize(term.size(), zero);
      for (size_t t = 0; t < term.size(); ++t)
        acc[t] = (i % 2 == 0) ? acc[t] + term[t] : acc[t] - term[t];
    }
    return acc;
  };
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  PolyV cp = det(idx, idx);
  cp.resize(n + 1, zero);
  return cp;
}

// Gauss-Jordan inverse over a field.  Throws Singular when not invertible.
Mat<FieldElem> field_inverse(const Mat<FieldElem>& m);
FieldElem field_det(const Mat<FieldElem>& m);

// Determinant over Z/p^N via fraction-free elimination on integer lifts.
WittElem witt_det(const Mat<WittElem>& m);

}  // namespace operlab
