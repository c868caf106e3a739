#ifndef SOLIDUS_MATRIX_HPP
#define SOLIDUS_MATRIX_HPP

#include <vector>

#include "solidus/number_field.hpp"
#include "solidus/rational.hpp"

namespace solidus {

/// Dense exact matrix over a field K.
template <typename K>
class matrix {
 public:
  matrix() = default;
  matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols, field_traits<K>::zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  K& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const K& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  /// Row-reduces a copy (exact division by pivots); returns rank and fills
  /// the reduced row echelon form plus pivot columns when requested.
  int rank(std::vector<int>* pivot_cols = nullptr,
           matrix* rref_out = nullptr) const {
    matrix m = *this;
    std::vector<int> pivots;
    int r = 0;
    for (int j = 0; j < cols_ && r < rows_; ++j) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!solidus::is_zero(m.at(i, j))) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int k = 0; k < cols_; ++k) std::swap(m.at(p, k), m.at(r, k));
      K inv = field_traits<K>::one() / m.at(r, j);
      for (int k = j; k < cols_; ++k) m.at(r, k) = inv * m.at(r, k);
      for (int i = 0; i < rows_; ++i) {
        if (i == r || solidus::is_zero(m.at(i, j))) continue;
        K f = m.at(i, j);
        for (int k = j; k < cols_; ++k)
          m.at(i, k) = m.at(i, k) - f * m.at(r, k);
      }
      pivots.push_back(j);
      ++r;
    }
    if (pivot_cols) *pivot_cols = pivots;
    if (rref_out) *rref_out = m;
    return r;
  }

  /// Basis of the right nullspace, one vector per free column.
  std::vector<std::vector<K>> nullspace() const {
    std::vector<int> pivots;
    matrix m;
    rank(&pivots, &m);
    std::vector<bool> is_pivot(cols_, false);
    for (int j : pivots) is_pivot[j] = true;
    std::vector<std::vector<K>> basis;
    for (int j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      std::vector<K> v(cols_, field_traits<K>::zero());
      v[j] = field_traits<K>::one();
      for (size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = field_traits<K>::zero() - m.at(int(r), j);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// One solution of Ax = b, or nullopt when inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    matrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<int> pivots;
    matrix m;
    aug.rank(&pivots, &m);
    for (int j : pivots)
      if (j == cols_) return std::nullopt;  // pivot in the constants column
    std::vector<K> x(cols_, field_traits<K>::zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m.at(int(r), cols_);
    return x;
  }

  std::vector<K> mul(const std::vector<K>& v) const {
    std::vector<K> r(rows_, field_traits<K>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
    return r;
  }

  /// Determinant by cofactor expansion; the independent oracle route for
  /// tests, deliberately naive.
  K det_by_minors() const {
    if (rows_ != cols_) throw kernel_error("det of non-square matrix");
    if (rows_ == 0) return field_traits<K>::one();
    if (rows_ == 1) return at(0, 0);
    K acc = field_traits<K>::zero();
    for (int j = 0; j < cols_; ++j) {
      if (solidus::is_zero(at(0, j))) continue;
      matrix sub(rows_ - 1, cols_ - 1);
      for (int i = 1; i < rows_; ++i) {
        int cc = 0;
        for (int k = 0; k < cols_; ++k) {
          if (k == j) continue;
          sub.at(i - 1, cc++) = at(i, k);
        }
      }
      K term = at(0, j) * sub.det_by_minors();
      if (j % 2 == 0)
        acc = acc + term;
      else
        acc = acc - term;
    }
    return acc;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

/// Fraction-free Bareiss rank for rational matrices: rows are scaled to
/// integers and elimination stays in Z, which controls coefficient blowup.
int bareiss_rank(const matrix<rational>& m);

/// Integer determinant via Bareiss; exact.
rational bareiss_det(const matrix<rational>& m);

}  // namespace solidus

#endif
