#pragma once

// Classical group characters as ratios of alternants, their Weyl denominators, and
// exact specializations (rational points and principal specializations q -> 1).

#include "charlab/determinant.hpp"
#include "charlab/laurent.hpp"
#include "charlab/shapes.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

enum class Family { gl, so_odd, sp, o_even, so_even };

std::string_view to_string(Family f);
/// "gl", "so-odd", "sp", "o-even", "so-even".
Family parse_family(std::string_view text);

/// Raised when the Weyl denominator vanishes at the requested point.
class SingularDenominator : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family + highest weight + variable count, validated on construction.
class CharacterSpec {
 public:
  CharacterSpec(Family family, Shape shape, std::size_t nvars);

  Family family() const { return family_; }
  const Shape& shape() const { return shape_; }
  std::size_t nvars() const { return nvars_; }

 private:
  Family family_;
  Shape shape_;
  std::size_t nvars_;
};

/// Generic alternant det_{h,t}(x_h^{e_t + s} + bar * x_h^{-e_t + s}); bar == 0 drops the
/// second monomial. `row_shift` s is the common factor x_h^s pulled into each row to make
/// all exponents integral.
struct Alternant {
  std::vector<HalfExp> exponents;
  int bar = 0;
  HalfExp row_shift{};
};

/// Numerator alternants (one, or two summed for so-even) and denominator alternant of a
/// character, with row shifts chosen so every exponent is integral.
struct AlternantQuotient {
  std::vector<Alternant> numerators;
  Alternant denominator;
  Rational scale = 1;  // leading factor: 2 for o-even, else 1

  /// Exponent of the leftover factor prod_h x_h^{correction} (s_den - s_num).
  HalfExp correction() const;
};

AlternantQuotient alternant_quotient(const CharacterSpec& spec);

/// Symbolic matrix of an alternant (without applying the row shift).
DenseMatrix<RationalPoly> alternant_matrix(const Alternant& a, std::size_t nvars);

/// Product form of the Weyl denominator for the family's type (A for gl, B for so-odd,
/// C for sp, D for o-even and so-even).
RationalPoly weyl_denominator(Family family, std::size_t nvars);

/// Factors of weyl_denominator: a scalar-times-monomial prefactor followed by binomials.
std::vector<RationalPoly> weyl_denominator_factors(Family family, std::size_t nvars);

/// The denominator determinant itself, expanded symbolically.
RationalPoly weyl_denominator_determinant(Family family, std::size_t nvars);

/// The character as a Laurent polynomial: numerator determinant(s) divided exactly by
/// the Weyl denominator. Guarded by max_symbolic_vars().
RationalPoly character_poly(const CharacterSpec& spec);

/// 2 det(x^{l+N-t} + x^{-(l+N-t)}) / det(x^{N-t} + x^{-(N-t)}) for any partition,
/// including l_N = 0 where it is twice the irreducible character.
RationalPoly o_even_literal_poly(const Shape& shape, std::size_t nvars);

/// Exact value at a rational point, optionally negating individual coordinates.
/// Throws SingularDenominator if the Weyl denominator vanishes there.
Rational character_at(const CharacterSpec& spec, std::span<const Rational> point, const std::vector<bool>& negate = {});

/// Substitutes x_h = q^h (or x_h = -q^{h-1} when negate), divides in Q[q^{±1/2}] and
/// lets q -> 1.
Integer principal_specialization(const CharacterSpec& spec, bool negate = false);

/// prod_{1<=h<t<=N+1} (2m+2N+3-h-t)/(2N+3-h-t).
Rational sp_dimension_product(int m, int N);

/// 2 prod_{1<=h<t<=n} (2m+2n-h-t)/(2n-h-t).
Rational spp_star_product(int m, int n);

enum class OddColumnsMode { zero, full };

/// (x_1...x_n)^{-c} times the sum of s_nu over nu in ((2c)^n) whose complement
/// ((2c)^n)/nu has no odd column (zero) or only odd columns (full, i.e. 2c of them).
RationalPoly so_even_schur_sum(HalfExp c, std::size_t nvars, OddColumnsMode mode);

/// so_even_schur_sum at x = (1,...,1), summing principal specializations of s_nu.
Integer so_even_schur_sum_at_ones(HalfExp c, std::size_t nvars, OddColumnsMode mode);

}  // namespace charlab
