#pragma once

// Plane partitions in a box: brute-force enumeration with symmetry classes, and the
// count identities relating them to specialized characters.

#include "charlab/exact.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

/// b x c matrix of entries in [0, height], weakly decreasing along rows and columns.
class PlanePartition {
 public:
  PlanePartition(int height, int rows, int cols, std::vector<int> entries);

  int height() const { return height_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool is_symmetric() const;
  /// pi(i, j) + pi(n-1-j, n-1-i) == height for all cells (square only).
  bool is_transpose_complementary() const;

 private:
  int height_, rows_, cols_;
  std::vector<int> entries_;
};

enum class Symmetry { none, symmetric, transpose_complementary };

/// Largest number of plane partitions any enumeration will visit.
inline constexpr std::uint64_t kMaxEnumeration = 100'000'000;

/// Visits every plane partition in the height x rows x cols box (with the optional
/// symmetry), in row-major lexicographic order with entries increasing from 0, so the
/// all-zero partition comes first. The visitor returns false to stop early.
/// Throws GuardExceeded when the class is larger than kMaxEnumeration.
void enumerate_pp(int height, int rows, int cols, Symmetry sym, const std::function<bool(const PlanePartition&)>& visit);

/// Number of plane partitions in the class (by enumeration).
Integer count_pp(int height, int rows, int cols);
Integer count_spp(int height, int n);
/// Transpose-complementary plane partitions in the (2m) x n x n box.
Integer count_tcpp(int m, int n);

/// The k-th partition in enumeration order, if it exists.
std::optional<PlanePartition> nth_pp(int height, int rows, int cols, std::uint64_t k);

/// prod_{i,j,k} (i+j+k-1)/(i+j+k-2) over the box.
Integer pp_product(int height, int rows, int cols);
/// prod_{1<=i<=j<=n} (height+i+j-1)/(i+j-1).
Integer spp_product(int height, int n);

/// Character values: s_{(height^rows)}(1^{rows+cols}), so_{((height/2)^n)}(1^n),
/// (-1)^{mn} so_{(m^n)}(-1^n), and o^even_{(m^n)}(1^n).
Integer pp_character(int height, int rows, int cols);
Integer spp_character(int height, int n);
Integer tcpp_character(int m, int n);
/// For m = 0 the even orthogonal value is taken from the so-even Schur sums.
Integer spp_star_character(int m, int n);

/// SPP*(2m, n, n) by its product formula, the even orthogonal specialization, and the
/// so-even Schur sums at all ones. Throws std::logic_error if they disagree.
Integer count_spp_star_algebraic(int m, int n);

enum class CountFamily { pp, spp, tcpp, spp_star };
enum class CountMethod { bruteforce, character, product };

std::string_view to_string(CountFamily f);
CountFamily parse_count_family(std::string_view text);
std::string_view to_string(CountMethod m);
CountMethod parse_count_method(std::string_view text);

/// Methods that apply to a family (SPP* has no trusted enumerator).
std::vector<CountMethod> applicable_methods(CountFamily f);

struct CountReport {
  CountFamily family = CountFamily::pp;
  int height = 0, rows = 0, cols = 0;
  /// Method -> value; empty optional means skipped by the enumeration guard.
  std::map<CountMethod, std::optional<Integer>> methods;

  bool consistent() const;
  /// The common value of the methods that ran (none if every method was skipped).
  std::optional<Integer> value() const;
};

/// Counts one class. height is 2m except for pp, where rows and cols default to n.
/// Throws std::invalid_argument for a method that does not apply to the family.
CountReport count(CountFamily f, int height, int rows, int cols, const std::vector<CountMethod>& methods);

struct CountIdentityReport {
  std::string identity;  // "even", "odd", "odd-pair", "even-pair"
  int m = 0, n = 0;
  std::vector<std::pair<std::string, CountReport>> quantities;  // label -> report
  std::optional<Integer> lhs, rhs;

  bool consistent() const;
};

/// Evaluates both sides of a count identity with every applicable method:
///   even:      PP(2m,n,n) = SPP(2m,n,n) TCPP(2m,n,n)
///   odd:       PP(2m+1,n,n) = TCPP(2m,n+1,n+1) SPP*(2m+2,n,n)
///   odd-pair:  PP(2m+1,n,n) + PP(2m+1,n-1,n+1) = SPP(2m+2,n,n) TCPP(2m,n,n)
///   even-pair: PP(2m,n,n) + PP(2m,n-1,n+1) = TCPP(2m,n+1,n+1) SPP*(2m,n,n)
CountIdentityReport verify_count_identity(std::string_view which, int m, int n);

}  // namespace charlab
