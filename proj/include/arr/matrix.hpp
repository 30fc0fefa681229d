#pragma once

#include <cassert>
#include <vector>

#include "arr/field.hpp"

namespace arr {

// Dense exact matrix over a field context.  Everything in scope is small
// (at most a few thousand columns), so no sparse machinery.
template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix mul(const Matrix& o) const {
    assert(cols_ == o.rows_);
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& v = (*this)(i, k);
        if (field_.is_zero(v)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) = field_.add(r(i, j), field_.mul(v, o(k, j)));
      }
    return r;
  }

  bool is_zero() const {
    for (const Elem& v : a_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    assert(v.size() == cols_);
    std::vector<Elem> r(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero((*this)(i, j)))
          r[i] = field_.add(r[i], field_.mul((*this)(i, j), v[j]));
    return r;
  }

  // In-place reduced row echelon form; returns pivot column list.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && field_.is_zero((*this)(p, c))) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      Elem iv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = field_.mul((*this)(r, j), iv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || field_.is_zero((*this)(i, c))) continue;
        Elem f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          (*this)(i, j) = field_.sub((*this)(i, j), field_.mul(f, (*this)(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  // Basis of { v : A v = 0 }.  rank + basis size = cols.
  std::vector<std::vector<Elem>> nullspace() const {
    Matrix copy = *this;
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[c] = field_.one();
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = field_.neg(copy(i, c));
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// rank + nullspace in one call; the pair the callers usually want.
template <Field F>
std::pair<std::size_t, std::vector<std::vector<typename F::Elem>>> rank_nullspace(
    const Matrix<F>& m) {
  auto basis = m.nullspace();
  return {m.cols() - basis.size(), std::move(basis)};
}

// Row-span membership: is v in the span of the rows of `basis`?
template <Field F>
bool in_row_span(F field, const std::vector<std::vector<typename F::Elem>>& basis,
                 const std::vector<typename F::Elem>& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!field.is_zero(x)) return false;
    return true;
  }
  std::size_t n = v.size();
  Matrix<F> m(field, basis.size(), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = basis[i][j];
  std::size_t r0 = m.rank();
  Matrix<F> m2(field, basis.size() + 1, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m2(i, j) = basis[i][j];
  for (std::size_t j = 0; j < n; ++j) m2(basis.size(), j) = v[j];
  return m2.rank() == r0;
}

}  // namespace arr
