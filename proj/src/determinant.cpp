#include "charlab/determinant.hpp"

namespace charlab {

Integer determinant(DenseMatrix<Integer> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Integer(1);
  int sign = 1;
  Integer prev_pivot = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity makes this division exact.
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = m(k, k);
  }
  Integer d = m(n - 1, n - 1);
  return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const DenseMatrix<Rational>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  DenseMatrix<Integer> scaled(n, n);
  Integer scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < n; ++j) scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational d(determinant(std::move(scaled)), scale);
  d.canonicalize();
  return d;
}

}  // namespace charlab
