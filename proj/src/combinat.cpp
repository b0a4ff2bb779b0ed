#include "charlab/combinat.hpp"

#include "charlab/characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace charlab {

namespace {

void check_box(int height, int rows, int cols) {
  if (height < 0 || rows < 0 || cols < 0) throw std::invalid_argument("box dimensions must be non-negative");
}

Integer as_integer(const Rational& r) {
  if (r.get_den() != 1) throw std::logic_error("product formula is not an integer: " + to_string(r));
  return r.get_num();
}

Integer class_size(int height, int rows, int cols, Symmetry sym) {
  switch (sym) {
    case Symmetry::none:
      return pp_product(height, rows, cols);
    case Symmetry::symmetric:
      return spp_product(height, rows);
    case Symmetry::transpose_complementary:
      if (height % 2 != 0) return 0;
      return rows == 0 ? Integer(1) : as_integer(sp_dimension_product(height / 2, rows - 1));
  }
  return 0;
}

void check_guard(int height, int rows, int cols, Symmetry sym) {
  if (class_size(height, rows, cols, sym) > Integer(static_cast<unsigned long>(kMaxEnumeration)))
    throw GuardExceeded("enumeration of the " + std::to_string(height) + "x" + std::to_string(rows) + "x" + std::to_string(cols) +
                        " box exceeds " + std::to_string(kMaxEnumeration) + " partitions");
}

// Row-major backtracking. Cells whose value is already determined by the symmetry
// (the mirror cell, or the complement partner) are forced instead of branched.
class Backtracker {
 public:
  Backtracker(int height, int rows, int cols, Symmetry sym)
      : height_(height), rows_(rows), cols_(cols), sym_(sym), pi_(static_cast<std::size_t>(rows * cols), 0) {
    if (sym != Symmetry::none && rows != cols) throw std::invalid_argument("symmetry classes need a square base");
  }

  // Visits leaves; returns false if the visitor stopped the walk.
  template <typename Visit>
  bool walk(Visit&& visit) { return step(0, visit); }

  // Counts leaves, summing the last free cell's range instead of branching over it.
  Integer count() { return count_from(0); }

  const std::vector<int>& entries() const { return pi_; }

 private:
  int& at(int i, int j) { return pi_[static_cast<std::size_t>(i * cols_ + j)]; }

  // Upper bound from the monotonicity constraints and, if forced, the forced value.
  std::pair<int, std::optional<int>> bounds(int k) {
    const int i = k / cols_, j = k % cols_;
    int hi = height_;
    if (i > 0) hi = std::min(hi, at(i - 1, j));
    if (j > 0) hi = std::min(hi, at(i, j - 1));
    std::optional<int> forced;
    if (sym_ == Symmetry::symmetric && j < i) forced = at(j, i);
    if (sym_ == Symmetry::transpose_complementary) {
      const int pi = rows_ - 1 - j, pj = rows_ - 1 - i;
      const int partner = pi * cols_ + pj;
      if (partner < k) forced = height_ - at(pi, pj);
      else if (partner == k) forced = height_ % 2 == 0 ? height_ / 2 : -1;
    }
    return {hi, forced};
  }

  template <typename Visit>
  bool step(int k, Visit& visit) {
    if (k == rows_ * cols_) return visit(pi_);
    const auto [hi, forced] = bounds(k);
    if (forced) {
      if (*forced < 0 || *forced > hi) return true;
      pi_[static_cast<std::size_t>(k)] = *forced;
      return step(k + 1, visit);
    }
    for (int v = 0; v <= hi; ++v) {
      pi_[static_cast<std::size_t>(k)] = v;
      if (!step(k + 1, visit)) return false;
    }
    return true;
  }

  Integer count_from(int k) {
    if (k == rows_ * cols_) return 1;
    const auto [hi, forced] = bounds(k);
    if (forced) {
      if (*forced < 0 || *forced > hi) return 0;
      pi_[static_cast<std::size_t>(k)] = *forced;
      return count_from(k + 1);
    }
    if (k + 1 == rows_ * cols_) return hi + 1;
    Integer total = 0;
    for (int v = 0; v <= hi; ++v) {
      pi_[static_cast<std::size_t>(k)] = v;
      total += count_from(k + 1);
    }
    return total;
  }

  int height_, rows_, cols_;
  Symmetry sym_;
  std::vector<int> pi_;
};

Integer count_class(int height, int rows, int cols, Symmetry sym) {
  check_box(height, rows, cols);
  if (sym != Symmetry::none && rows != cols) throw std::invalid_argument("symmetry classes need a square base");
  check_guard(height, rows, cols, sym);
  return Backtracker(height, rows, cols, sym).count();
}

Shape rectangle_padded(HalfExp side, int rows, int len) {
  std::vector<HalfExp> parts(static_cast<std::size_t>(rows), side);
  parts.resize(static_cast<std::size_t>(len), HalfExp{});
  return Shape(std::move(parts));
}

struct NamedFamily {
  CountFamily f;
  std::string_view text;
};
constexpr NamedFamily kCountFamilies[] = {
    {CountFamily::pp, "pp"}, {CountFamily::spp, "spp"}, {CountFamily::tcpp, "tcpp"}, {CountFamily::spp_star, "spp-star"}};

struct NamedMethod {
  CountMethod m;
  std::string_view text;
};
constexpr NamedMethod kCountMethods[] = {
    {CountMethod::bruteforce, "bruteforce"}, {CountMethod::character, "character"}, {CountMethod::product, "product"}};

}  // namespace

PlanePartition::PlanePartition(int height, int rows, int cols, std::vector<int> entries)
    : height_(height), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_box(height, rows, cols);
  if (entries_.size() != static_cast<std::size_t>(rows * cols)) throw std::invalid_argument("plane partition has the wrong number of entries");
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const int v = (*this)(i, j);
      if (v < 0 || v > height) throw std::invalid_argument("plane partition entry outside [0, height]");
      if ((i > 0 && (*this)(i - 1, j) < v) || (j > 0 && (*this)(i, j - 1) < v))
        throw std::invalid_argument("plane partition entries must decrease weakly along rows and columns");
    }
}

bool PlanePartition::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool PlanePartition::is_transpose_complementary() const {
  if (rows_ != cols_) return false;
  const int n = rows_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((*this)(i, j) + (*this)(n - 1 - j, n - 1 - i) != height_) return false;
  return true;
}

void enumerate_pp(int height, int rows, int cols, Symmetry sym, const std::function<bool(const PlanePartition&)>& visit) {
  check_box(height, rows, cols);
  check_guard(height, rows, cols, sym);
  Backtracker bt(height, rows, cols, sym);
  bt.walk([&](const std::vector<int>& e) { return visit(PlanePartition(height, rows, cols, e)); });
}

Integer count_pp(int height, int rows, int cols) { return count_class(height, rows, cols, Symmetry::none); }
Integer count_spp(int height, int n) { return count_class(height, n, n, Symmetry::symmetric); }

Integer count_tcpp(int m, int n) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  return count_class(2 * m, n, n, Symmetry::transpose_complementary);
}

std::optional<PlanePartition> nth_pp(int height, int rows, int cols, std::uint64_t k) {
  check_box(height, rows, cols);
  if (Integer(static_cast<unsigned long>(k)) >= pp_product(height, rows, cols)) return std::nullopt;
  std::optional<PlanePartition> found;
  std::uint64_t index = 0;
  Backtracker(height, rows, cols, Symmetry::none).walk([&](const std::vector<int>& e) {
    if (index++ < k) return true;
    found.emplace(height, rows, cols, e);
    return false;
  });
  return found;
}

Integer pp_product(int height, int rows, int cols) {
  check_box(height, rows, cols);
  Rational r = 1;
  for (int i = 1; i <= height; ++i)
    for (int j = 1; j <= rows; ++j)
      for (int k = 1; k <= cols; ++k) r *= Rational(i + j + k - 1, i + j + k - 2);
  r.canonicalize();
  return as_integer(r);
}

Integer spp_product(int height, int n) {
  check_box(height, n, n);
  Rational r = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) r *= Rational(height + i + j - 1, i + j - 1);
  r.canonicalize();
  return as_integer(r);
}

Integer pp_character(int height, int rows, int cols) {
  check_box(height, rows, cols);
  const int nvars = rows + cols;
  if (nvars == 0) return 1;
  return principal_specialization(CharacterSpec(Family::gl, rectangle_padded(HalfExp::integer(height), rows, nvars), nvars));
}

Integer spp_character(int height, int n) {
  check_box(height, n, n);
  if (n == 0) return 1;
  return principal_specialization(CharacterSpec(Family::so_odd, rectangle_padded(HalfExp::halves(height), n, n), n));
}

Integer tcpp_character(int m, int n) {
  check_box(2 * m, n, n);
  if (n == 0) return 1;
  const Integer v = principal_specialization(CharacterSpec(Family::so_odd, rectangle_padded(HalfExp::integer(m), n, n), n), true);
  return (static_cast<long>(m) * n) % 2 == 0 ? v : Integer(-v);
}

Integer spp_star_character(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("SPP* needs m >= 0 and n >= 1");
  if (m == 0)
    return so_even_schur_sum_at_ones(HalfExp{}, static_cast<std::size_t>(n), OddColumnsMode::zero) +
           so_even_schur_sum_at_ones(HalfExp{}, static_cast<std::size_t>(n), OddColumnsMode::full);
  return principal_specialization(CharacterSpec(Family::o_even, rectangle_padded(HalfExp::integer(m), n, n), n));
}

Integer count_spp_star_algebraic(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("SPP* needs m >= 0 and n >= 1");
  const Integer product = as_integer(spp_star_product(m, n));
  const Integer character = spp_star_character(m, n);
  const auto un = static_cast<std::size_t>(n);
  const Integer schur = so_even_schur_sum_at_ones(HalfExp::integer(m), un, OddColumnsMode::zero) +
                        so_even_schur_sum_at_ones(HalfExp::integer(m), un, OddColumnsMode::full);
  if (product != character || product != schur)
    throw std::logic_error("SPP* characterizations disagree: product " + to_string(product) + ", character " + to_string(character) +
                           ", Schur sums " + to_string(schur));
  return product;
}

std::string_view to_string(CountFamily f) {
  for (const auto& [v, text] : kCountFamilies)
    if (v == f) return text;
  throw std::invalid_argument("unknown count family");
}

CountFamily parse_count_family(std::string_view text) {
  for (const auto& [v, name] : kCountFamilies)
    if (name == text) return v;
  throw std::invalid_argument("unknown count family '" + std::string(text) + "' (expected pp, spp, tcpp or spp-star)");
}

std::string_view to_string(CountMethod m) {
  for (const auto& [v, text] : kCountMethods)
    if (v == m) return text;
  throw std::invalid_argument("unknown count method");
}

CountMethod parse_count_method(std::string_view text) {
  for (const auto& [v, name] : kCountMethods)
    if (name == text) return v;
  throw std::invalid_argument("unknown method '" + std::string(text) + "' (expected bruteforce, character or product)");
}

std::vector<CountMethod> applicable_methods(CountFamily f) {
  if (f == CountFamily::spp_star) return {CountMethod::character, CountMethod::product};
  return {CountMethod::bruteforce, CountMethod::character, CountMethod::product};
}

bool CountReport::consistent() const {
  std::optional<Integer> seen;
  for (const auto& [method, v] : methods) {
    if (!v) continue;
    if (seen && *seen != *v) return false;
    seen = v;
  }
  return true;
}

std::optional<Integer> CountReport::value() const {
  if (!consistent()) return std::nullopt;
  for (const auto& [method, v] : methods)
    if (v) return v;
  return std::nullopt;
}

CountReport count(CountFamily f, int height, int rows, int cols, const std::vector<CountMethod>& methods) {
  check_box(height, rows, cols);
  if (f != CountFamily::pp && rows != cols) throw std::invalid_argument("symmetric classes need a square base");
  if ((f == CountFamily::tcpp || f == CountFamily::spp_star) && height % 2 != 0)
    throw std::invalid_argument(std::string(to_string(f)) + " needs an even height");
  if (f == CountFamily::spp_star && rows < 1) throw std::invalid_argument("spp-star needs n >= 1");
  const auto ok = applicable_methods(f);
  CountReport r;
  r.family = f;
  r.height = height;
  r.rows = rows;
  r.cols = cols;
  const int m = height / 2, n = rows;
  for (auto method : methods) {
    if (std::find(ok.begin(), ok.end(), method) == ok.end())
      throw std::invalid_argument("method " + std::string(to_string(method)) + " does not apply to " + std::string(to_string(f)));
    std::optional<Integer> v;
    try {
      switch (method) {
        case CountMethod::bruteforce:
          v = f == CountFamily::pp ? count_pp(height, rows, cols) : f == CountFamily::spp ? count_spp(height, n) : count_tcpp(m, n);
          break;
        case CountMethod::character:
          v = f == CountFamily::pp     ? pp_character(height, rows, cols)
              : f == CountFamily::spp  ? spp_character(height, n)
              : f == CountFamily::tcpp ? tcpp_character(m, n)
                                       : spp_star_character(m, n);
          break;
        case CountMethod::product:
          v = f == CountFamily::pp     ? pp_product(height, rows, cols)
              : f == CountFamily::spp  ? spp_product(height, n)
              : f == CountFamily::tcpp ? (n == 0 ? Integer(1) : as_integer(sp_dimension_product(m, n - 1)))
                                       : as_integer(spp_star_product(m, n));
          break;
      }
    } catch (const GuardExceeded&) {
      v.reset();
    }
    r.methods[method] = v;
  }
  return r;
}

bool CountIdentityReport::consistent() const {
  for (const auto& [label, q] : quantities)
    if (!q.consistent()) return false;
  return lhs && rhs && *lhs == *rhs;
}

CountIdentityReport verify_count_identity(std::string_view which, int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("count identities need m >= 0 and n >= 1");
  CountIdentityReport r;
  r.identity = std::string(which);
  r.m = m;
  r.n = n;
  auto quantity = [&](CountFamily f, int height, int rows, int cols) -> std::optional<Integer> {
    const std::string name = f == CountFamily::pp ? "PP" : f == CountFamily::spp ? "SPP" : f == CountFamily::tcpp ? "TCPP" : "SPP*";
    const std::string label = name + "(" + std::to_string(height) + "," + std::to_string(rows) + "," + std::to_string(cols) + ")";
    auto rep = count(f, height, rows, cols, applicable_methods(f));
    auto v = rep.value();
    r.quantities.emplace_back(label, std::move(rep));
    return v;
  };
  auto times = [](const std::optional<Integer>& a, const std::optional<Integer>& b) -> std::optional<Integer> {
    if (!a || !b) return std::nullopt;
    return Integer(*a * *b);
  };
  auto plus = [](const std::optional<Integer>& a, const std::optional<Integer>& b) -> std::optional<Integer> {
    if (!a || !b) return std::nullopt;
    return Integer(*a + *b);
  };
  if (which == "even") {
    r.lhs = quantity(CountFamily::pp, 2 * m, n, n);
    r.rhs = times(quantity(CountFamily::spp, 2 * m, n, n), quantity(CountFamily::tcpp, 2 * m, n, n));
  } else if (which == "odd") {
    r.lhs = quantity(CountFamily::pp, 2 * m + 1, n, n);
    r.rhs = times(quantity(CountFamily::tcpp, 2 * m, n + 1, n + 1), quantity(CountFamily::spp_star, 2 * m + 2, n, n));
  } else if (which == "odd-pair") {
    r.lhs = plus(quantity(CountFamily::pp, 2 * m + 1, n, n), quantity(CountFamily::pp, 2 * m + 1, n - 1, n + 1));
    r.rhs = times(quantity(CountFamily::spp, 2 * m + 2, n, n), quantity(CountFamily::tcpp, 2 * m, n, n));
  } else if (which == "even-pair") {
    r.lhs = plus(quantity(CountFamily::pp, 2 * m, n, n), quantity(CountFamily::pp, 2 * m, n - 1, n + 1));
    r.rhs = times(quantity(CountFamily::tcpp, 2 * m, n + 1, n + 1), quantity(CountFamily::spp_star, 2 * m, n, n));
  } else {
    throw std::invalid_argument("unknown count identity '" + std::string(which) + "' (expected even, odd, odd-pair or even-pair)");
  }
  return r;
}

}  // namespace charlab
