#pragma once

// Exact scalar types and the Eigen glue that lets them live in dense matrices.

#include <Eigen/Core>
#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charlab {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when a division that must be exact leaves a remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 64-bit integer coefficient that throws instead of wrapping. Used as a fast
/// coefficient ring where the coefficient growth is known to stay small; callers
/// fall back to Integer when std::overflow_error escapes.
class CheckedInt64 {
 public:
  constexpr CheckedInt64() = default;
  constexpr CheckedInt64(std::int64_t v) : v_(v) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt64 operator+(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt64 addition overflow");
    return r;
  }
  friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt64 subtraction overflow");
    return r;
  }
  friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt64 multiplication overflow");
    return r;
  }
  CheckedInt64 operator-() const {
    if (v_ == INT64_MIN) throw std::overflow_error("CheckedInt64 negation overflow");
    return -v_;
  }
  CheckedInt64& operator+=(CheckedInt64 o) { return *this = *this + o; }
  CheckedInt64& operator-=(CheckedInt64 o) { return *this = *this - o; }
  CheckedInt64& operator*=(CheckedInt64 o) { return *this = *this * o; }

  friend constexpr bool operator==(CheckedInt64, CheckedInt64) = default;

 private:
  std::int64_t v_ = 0;
};

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
std::string to_string(CheckedInt64 z);

/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Square root of a non-negative rational, if it is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

/// base^e for any integer e; base must be nonzero when e < 0.
Rational power(const Rational& base, long e);

// Coefficient-ring conversions used by the generic polynomial code.
template <typename Scalar>
Scalar scalar_from_rational(const Rational& r);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& r) {
  return r;
}

template <>
inline Integer scalar_from_rational<Integer>(const Rational& r) {
  if (r.get_den() != 1) throw InexactDivision("non-integral value in an integer coefficient ring: " + to_string(r));
  return r.get_num();
}

template <>
inline CheckedInt64 scalar_from_rational<CheckedInt64>(const Rational& r) {
  if (r.get_den() != 1) throw InexactDivision("non-integral value in an integer coefficient ring: " + to_string(r));
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("value exceeds CheckedInt64");
  return static_cast<std::int64_t>(r.get_num().get_si());
}

inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(const Integer& z) { return Rational(z); }
inline Rational to_rational(CheckedInt64 z) { return Rational(static_cast<long>(z.value())); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(CheckedInt64 z) { return z.value() == 0; }

/// a / b, required to be exact in the coefficient ring.
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw InexactDivision("coefficient " + to_string(a) + " not divisible by " + to_string(b));
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline CheckedInt64 exact_quotient(CheckedInt64 a, CheckedInt64 b) {
  if (b.value() == 0 || a.value() % b.value() != 0)
    throw InexactDivision("coefficient " + to_string(a) + " not divisible by " + to_string(b));
  if (a.value() == INT64_MIN && b.value() == -1) throw std::overflow_error("CheckedInt64 division overflow");
  return a.value() / b.value();
}

}  // namespace charlab

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
};

}  // namespace Eigen
