#ifndef GPD_LINALG_HPP
#define GPD_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gpd/scalar.hpp"

namespace gpd {

using QiVector = std::vector<GaussianRational>;

/// Dense matrix over Q(i). Sizes here are tiny (a few dozen rows), so no
/// sparsity or pivoting strategy is needed; everything is exact.
class QiMatrix {
public:
  QiMatrix() : rows_(0), cols_(0) {}
  QiMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QiMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  QiMatrix conj_transpose() const;

  QiMatrix& operator+=(const QiMatrix& o);
  QiMatrix& operator-=(const QiMatrix& o);
  QiMatrix& scale(const GaussianRational& c);

  friend QiMatrix operator+(QiMatrix a, const QiMatrix& b) { return a += b; }
  friend QiMatrix operator-(QiMatrix a, const QiMatrix& b) { return a -= b; }
  friend QiMatrix operator*(const QiMatrix& a, const QiMatrix& b);
  friend bool operator==(const QiMatrix& a, const QiMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const QiMatrix& a, const QiMatrix& b) { return !(a == b); }

  /// Row-major flattening, used to feed matrices into RowSpace / kernels.
  QiVector flatten() const { return a_; }

private:
  std::size_t rows_, cols_;
  std::vector<GaussianRational> a_;
};

/// Subspace of Q(i)^width kept as a reduced row echelon basis. insert()
/// reduces the vector against the basis and adopts any nonzero residue as a
/// new pivot row, so dim() only grows.
class RowSpace {
public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  /// Returns true when the vector enlarged the span.
  bool insert(QiVector v);
  bool contains(QiVector v) const;
  /// Residue of v after elimination against the basis.
  QiVector reduce(QiVector v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<QiVector>& basis() const { return rows_; }

private:
  std::size_t width_;
  std::vector<QiVector> rows_;        // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;   // pivot column per row, strictly handled
};

std::size_t rank_of(const std::vector<QiVector>& rows, std::size_t width);

/// Basis of { x : M x = 0 } where the i-th of `rows` is the i-th row of M.
std::vector<QiVector> nullspace_basis(const std::vector<QiVector>& rows, std::size_t ncols);

}  // namespace gpd

#endif  // GPD_LINALG_HPP
