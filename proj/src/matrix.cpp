#include "solidus/matrix.hpp"

#include <optional>

namespace solidus {

namespace {

// Integer matrix copy with denominators cleared row-wise.
std::vector<std::vector<integer>> to_integer_rows(const matrix<rational>& m) {
  std::vector<std::vector<integer>> a(m.rows(), std::vector<integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    integer l = 1;
    for (int j = 0; j < m.cols(); ++j) l = den_lcm(l, m.at(i, j));
    for (int j = 0; j < m.cols(); ++j) {
      const rational& q = m.at(i, j);
      a[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return a;
}

}  // namespace

int bareiss_rank(const matrix<rational>& m) {
  auto a = to_integer_rows(m);
  int rows = m.rows(), cols = m.cols();
  integer prev = 1;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][j]) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int k = j + 1; k < cols; ++k) {
        integer v = a[r][j] * a[i][k] - a[i][j] * a[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = v;
      }
      a[i][j] = 0;
    }
    prev = a[r][j];
    ++r;
  }
  return r;
}

rational bareiss_det(const matrix<rational>& m) {
  if (m.rows() != m.cols()) throw kernel_error("det of non-square matrix");
  int n = m.rows();
  if (n == 0) return rational(1);
  auto a = to_integer_rows(m);
  // determinant scales by the product of the row lcms; track it
  rational scale(1);
  for (int i = 0; i < n; ++i) {
    integer l = 1;
    for (int j = 0; j < n; ++j) l = den_lcm(l, m.at(i, j));
    scale *= rational(l);
  }
  integer prev = 1;
  int sign = 1;
  for (int r = 0; r < n - 1; ++r) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (sgn(a[i][r]) != 0) {
        p = i;
        break;
      }
    if (p < 0) return rational(0);
    if (p != r) {
      std::swap(a[p], a[r]);
      sign = -sign;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int k = r + 1; k < n; ++k) {
        integer v = a[r][r] * a[i][k] - a[i][r] * a[r][k];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][k] = v;
      }
      a[i][r] = 0;
    }
    prev = a[r][r];
  }
  rational det(a[n - 1][n - 1] * sign);
  det /= scale;
  det.canonicalize();
  return det;
}

}  // namespace solidus
