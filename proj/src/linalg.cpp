#include "gpd/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "gpd/errors.hpp"

namespace gpd {

QiMatrix QiMatrix::identity(std::size_t n) {
  QiMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool QiMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

QiMatrix QiMatrix::conj_transpose() const {
  QiMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

QiMatrix& QiMatrix::operator+=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

QiMatrix& QiMatrix::operator-=(const QiMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

QiMatrix& QiMatrix::scale(const GaussianRational& c) {
  for (auto& z : a_) z *= c;
  return *this;
}

QiMatrix operator*(const QiMatrix& a, const QiMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch in product");
  QiMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussianRational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

QiVector RowSpace::reduce(QiVector v) const {
  assert(v.size() == width_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    GaussianRational factor = c;  // pivot rows are normalized to 1
    for (std::size_t j = 0; j < width_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
    }
  }
  return v;
}

bool RowSpace::insert(QiVector v) {
  v = reduce(std::move(v));
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == width_) return false;
  GaussianRational inv = GaussianRational(1) / v[pivot];
  for (auto& z : v) z *= inv;
  // Back-substitute into existing rows to keep the basis fully reduced.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const GaussianRational& c = rows_[r][pivot];
    if (c.is_zero()) continue;
    GaussianRational factor = c;
    for (std::size_t j = 0; j < width_; ++j) {
      if (!v[j].is_zero()) rows_[r][j] -= factor * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpace::contains(QiVector v) const {
  v = reduce(std::move(v));
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

std::size_t rank_of(const std::vector<QiVector>& rows, std::size_t width) {
  RowSpace space(width);
  for (const auto& r : rows) space.insert(r);
  return space.dim();
}

std::vector<QiVector> nullspace_basis(const std::vector<QiVector>& rows, std::size_t ncols) {
  RowSpace space(ncols);
  for (const auto& r : rows) space.insert(r);

  // Pivot columns of the echelonized row space; the rest are free.
  std::vector<bool> is_pivot(ncols, false);
  std::vector<std::size_t> pivot_row(ncols, 0);
  const auto& basis = space.basis();
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!basis[r][j].is_zero()) {
        is_pivot[j] = true;
        pivot_row[j] = r;
        break;
      }
    }
  }

  std::vector<QiVector> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QiVector x(ncols);
    x[f] = GaussianRational(1);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (is_pivot[j]) x[j] = -basis[pivot_row[j]][f];
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace gpd
