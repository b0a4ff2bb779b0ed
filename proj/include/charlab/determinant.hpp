#pragma once

// Determinants of dense exact matrices: memoized cofactor expansion for polynomial
// entries, fraction-free Bareiss elimination for rational entries.

#include "charlab/exact.hpp"
#include "charlab/laurent.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace Eigen {

template <typename Scalar>
struct NumTraits<charlab::LaurentPoly<Scalar>> : GenericNumTraits<charlab::LaurentPoly<Scalar>> {
  using Real = charlab::LaurentPoly<Scalar>;
  using NonInteger = charlab::LaurentPoly<Scalar>;
  using Literal = charlab::LaurentPoly<Scalar>;
  using Nested = charlab::LaurentPoly<Scalar>;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 256
  };
};

}  // namespace Eigen

namespace charlab {

/// Determinant by Laplace expansion along rows, memoizing minors by their column set.
/// Costs O(2^n * n) polynomial operations instead of n!.
template <typename Scalar>
LaurentPoly<Scalar> determinant(const DenseMatrix<LaurentPoly<Scalar>>& m, std::size_t nvars) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n > 20) throw GuardExceeded("cofactor determinant limited to 20x20");
  if (n == 0) return LaurentPoly<Scalar>::constant(nvars, Scalar(1));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (m(r, c).nvars() != nvars && !m(r, c).is_zero())
        throw std::invalid_argument("determinant entries have inconsistent variable counts");

  // Level r holds det(rows [n-r, n) x columns S) for every |S| = r.
  std::unordered_map<std::uint32_t, LaurentPoly<Scalar>> level;
  level.emplace(0u, LaurentPoly<Scalar>::constant(nvars, Scalar(1)));
  for (std::size_t r = 1; r <= n; ++r) {
    const auto row = static_cast<Eigen::Index>(n - r);
    std::unordered_map<std::uint32_t, LaurentPoly<Scalar>> next;
    for (const auto& [sub, minor] : level) {
      if (minor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t bit = 1u << j;
        if (sub & bit) continue;
        const auto& entry = m(row, static_cast<Eigen::Index>(j));
        if (entry.is_zero()) continue;
        const std::uint32_t super = sub | bit;
        // Sign of column j inside `super` is (-1)^{#columns of super left of j}.
        const int left = __builtin_popcount(super & (bit - 1));
        LaurentPoly<Scalar> contrib = entry * minor;
        if (left % 2 == 1) contrib = -contrib;
        auto [it, inserted] = next.try_emplace(super, LaurentPoly<Scalar>(nvars));
        it->second += contrib;
      }
    }
    level = std::move(next);
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  auto it = level.find(all);
  return it == level.end() ? LaurentPoly<Scalar>(nvars) : it->second;
}

/// Fraction-free Bareiss elimination over the integers, with row pivoting.
Integer determinant(DenseMatrix<Integer> m);

/// Determinant of a rational matrix: rows are cleared of denominators, then Bareiss.
Rational determinant(const DenseMatrix<Rational>& m);

}  // namespace charlab
