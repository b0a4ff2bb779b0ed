#pragma once

// Symbolic and randomized verification of the subset-sum lemmas and the Schur
// factorization theorems.

#include "charlab/characters.hpp"
#include "charlab/laurent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charlab {

/// A subset A of the ground set [K] = {1, ..., K}, stored as a bitmask on 0-based
/// indices, together with its complement.
class SubsetTerm {
 public:
  SubsetTerm(std::uint32_t bits, std::size_t k);
  static SubsetTerm of(std::initializer_list<std::size_t> one_based, std::size_t k);

  std::uint32_t bits() const { return bits_; }
  std::size_t ground() const { return k_; }
  bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  SubsetTerm complement() const;
  /// 0-based members in increasing order.
  std::vector<std::size_t> members() const;

 private:
  std::uint32_t bits_;
  std::size_t k_;
};

/// V(A) = prod_{a<b in A} (x_a - x_b), or with every x replaced by x^{-1}.
RationalPoly vprod(const SubsetTerm& a, bool inverted, std::size_t nvars);

/// R(A^{±1}, B^{±1}) = prod_{a in A} prod_{b in B} (x_a^{±1} - x_b^{±1}).
RationalPoly rprod(const SubsetTerm& a, const SubsetTerm& b, bool a_inverted, bool b_inverted, std::size_t nvars);

enum class Side { lhs, rhs };

/// Ground set size of lemma `which` (1, 2 or 3) at parameter N: 2N, or 2N + 1 for Lemma 3.
std::size_t lemma_ground(int which, int N);

/// Fully expanded side of a lemma. Guarded by max_symbolic_vars() on the ground set.
RationalPoly lemma_side(int which, Side side, int N);

/// Exact value of a lemma side at a point of the ground set.
Rational lemma_side_at(int which, Side side, int N, std::span<const Rational> point);

/// True iff both expanded sides have x_1-degree within the lemma's stated bound.
bool degree_bound_check(int which, int N);

enum class Mode { symbolic, randomized };

std::string_view to_string(Mode m);
/// "symbolic" or "random".
Mode parse_mode(std::string_view text);

struct Counterexample {
  std::vector<Rational> point;  // empty when no separating point was found
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  Mode mode = Mode::symbolic;
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<Counterexample> counterexample;  // verdict is "equal" when empty
  std::optional<std::string> note;

  bool equal() const { return !counterexample.has_value(); }
};

/// Both sides of an identity in nvars variables, as polynomials and as point evaluators.
struct IdentityInstance {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::size_t nvars = 0;
  /// Sides contain half-integer powers, so random coordinates are drawn as squares.
  bool half_integral = false;
  std::function<RationalPoly()> lhs_poly;
  std::function<RationalPoly()> rhs_poly;
  std::function<Rational(std::span<const Rational>)> lhs_at;
  std::function<Rational(std::span<const Rational>)> rhs_at;
  std::optional<std::string> note;
};

/// Random nonzero point with x_i != ±1, x_i != x_j and x_i x_j != 1, drawn from
/// p/q with p, q in [1, 10^6] and random signs; squared when `squares` is set.
std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t nvars, bool squares);

/// Compares both sides symbolically (trials is ignored and reported as 1) or at
/// `trials` random points; the first differing trial is the counterexample.
VerificationReport verify_instance(const IdentityInstance& inst, Mode mode, int trials, std::uint64_t seed);

VerificationReport verify_lemma(int which, int N, Mode mode, int trials, std::uint64_t seed);

enum class Theorem { thm1, thm2, thm3, thm4, uniform15, uniform65 };

std::string_view to_string(Theorem t);
Theorem parse_theorem(std::string_view text);

/// For thm1..thm4 the parameter is m; for the uniform forms it is M.
IdentityInstance theorem_instance(Theorem t, int m, int n);
VerificationReport verify_theorem(Theorem t, int m, int n, Mode mode, int trials, std::uint64_t seed);

enum class Bridge { eq13, eq14 };

std::string_view to_string(Bridge b);
Bridge parse_bridge(std::string_view text);

/// eq13: (-1)^{|l|} so_l(-x) prod(x^{1/2} + x^{-1/2}) = o^even_{l+1/2}(x).
/// eq14: sp_l(x) prod(x^{1/2} + x^{-1/2}) = so_{l+1/2}(x).
IdentityInstance bridge_instance(Bridge b, const Shape& lambda);
VerificationReport verify_bridge(Bridge b, const Shape& lambda, Mode mode, int trials, std::uint64_t seed);

}  // namespace charlab
