#pragma once

// Multivariate Laurent polynomials with exact coefficients and half-integer
// exponents. Exponents are stored doubled, so x^{1/2} has doubled exponent 1.

#include "charlab/exact.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charlab {

/// Exponent in (1/2)Z, stored as twice its value.
struct HalfExp {
  int doubled = 0;

  static constexpr HalfExp integer(int k) { return HalfExp{2 * k}; }
  static constexpr HalfExp halves(int d) { return HalfExp{d}; }

  constexpr bool is_integral() const { return doubled % 2 == 0; }
  /// Value as a rational number.
  Rational value() const { return Rational(doubled, 2); }

  constexpr HalfExp operator-() const { return HalfExp{-doubled}; }
  friend constexpr HalfExp operator+(HalfExp a, HalfExp b) { return HalfExp{a.doubled + b.doubled}; }
  friend constexpr HalfExp operator-(HalfExp a, HalfExp b) { return HalfExp{a.doubled - b.doubled}; }
  friend constexpr HalfExp operator*(int k, HalfExp a) { return HalfExp{k * a.doubled}; }
  HalfExp& operator+=(HalfExp o) { doubled += o.doubled; return *this; }
  friend constexpr auto operator<=>(HalfExp, HalfExp) = default;
};

/// "3", "-2", "3/2", "-1/2".
std::string to_string(HalfExp e);
/// Inverse of to_string; accepts integers and odd numerators over 2.
HalfExp parse_half_exp(std::string_view text);

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector; compared lexicographically on the doubled exponents.
class Monomial {
 public:
  constexpr Monomial() = default;

  int doubled(std::size_t i) const { return exps_[i]; }
  HalfExp operator[](std::size_t i) const { return HalfExp{exps_[i]}; }
  void set(std::size_t i, HalfExp e) { exps_[i] = narrow(e.doubled); }

  bool is_integral() const {
    return std::all_of(exps_.begin(), exps_.end(), [](std::int16_t d) { return d % 2 == 0; });
  }

  Monomial inverse() const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = narrow(-int(exps_[i]));
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = narrow(int(a.exps_[i]) + int(b.exps_[i]));
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = narrow(int(a.exps_[i]) - int(b.exps_[i]));
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  static std::int16_t narrow(int d) {
    if (d > INT16_MAX || d < INT16_MIN) throw std::overflow_error("monomial exponent out of range");
    return static_cast<std::int16_t>(d);
  }

  std::array<std::int16_t, kMaxVars> exps_{};
};

namespace detail {

template <typename Scalar>
using TermVector = std::vector<std::pair<Monomial, Scalar>>;

// Merges two ascending term lists, summing equal monomials and dropping zeros.
template <typename Scalar>
TermVector<Scalar> merge_terms(const TermVector<Scalar>& a, const TermVector<Scalar>& b) {
  TermVector<Scalar> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      Scalar c = i->second + j->second;
      if (!is_zero(c)) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

}  // namespace detail

/// Element of Scalar[x_1^{±1/2}, ..., x_n^{±1/2}] in canonical form: terms sorted by
/// ascending monomial, no zero coefficients.
template <typename Scalar>
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(check_nvars(nvars)) {}

  static LaurentPoly constant(std::size_t nvars, const Scalar& c) {
    return monomial(nvars, Monomial{}, c);
  }
  static LaurentPoly monomial(std::size_t nvars, const Monomial& m, const Scalar& c = Scalar(1)) {
    LaurentPoly p(nvars);
    if (!charlab::is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// x_i^e (0-based variable index).
  static LaurentPoly variable(std::size_t nvars, std::size_t i, HalfExp e = HalfExp::integer(1)) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m;
    m.set(i, e);
    return monomial(nvars, m);
  }
  /// Builds a canonical polynomial from arbitrary (unsorted, repeated) terms.
  static LaurentPoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    LaurentPoly p(nvars);
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (charlab::is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!charlab::is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.back(); }
  const Term& trailing_term() const { return terms_.front(); }

  /// Coefficient of m (zero if absent).
  Scalar coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : Scalar(0);
  }

  /// True iff every exponent is an integer.
  bool is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.is_integral(); });
  }

  /// Smallest and largest exponent of variable i over all terms (zero polynomial: {0, 0}).
  std::pair<HalfExp, HalfExp> degree_range(std::size_t i) const {
    if (terms_.empty()) return {HalfExp{}, HalfExp{}};
    int lo = terms_.front().first.doubled(i);
    int hi = lo;
    for (const auto& t : terms_) {
      lo = std::min(lo, t.first.doubled(i));
      hi = std::max(hi, t.first.doubled(i));
    }
    return {HalfExp{lo}, HalfExp{hi}};
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  /// Multiplies by the monomial c * m.
  LaurentPoly times_term(const Monomial& m, const Scalar& c) const {
    LaurentPoly r(nvars_);
    if (charlab::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_compatible(o);
    terms_ = detail::merge_terms(terms_, o.terms_);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    const LaurentPoly& small = a.size() <= b.size() ? a : b;
    const LaurentPoly& large = a.size() <= b.size() ? b : a;
    LaurentPoly r(a.nvars_);
    if (small.is_zero()) return r;
    // Shifting a sorted term list by a monomial keeps it sorted, so the product is a
    // k-way merge of shifted copies of the larger factor.
    std::vector<detail::TermVector<Scalar>> parts;
    parts.reserve(small.size());
    for (const auto& t : small.terms_) parts.push_back(large.times_term(t.first, t.second).terms_);
    while (parts.size() > 1) {
      std::vector<detail::TermVector<Scalar>> next;
      next.reserve((parts.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(detail::merge_terms(parts[i], parts[i + 1]));
      if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    r.terms_ = std::move(parts.front());
    return r;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_compatible(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) + " vs " +
                                  std::to_string(o.nvars_));
  }

 private:
  static std::size_t check_nvars(std::size_t n) {
    if (n > kMaxVars) throw GuardExceeded("at most " + std::to_string(kMaxVars) + " variables are supported");
    return n;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using RationalPoly = LaurentPoly<Rational>;
using IntegerPoly = LaurentPoly<Integer>;

template <typename Scalar>
LaurentPoly<Scalar> add(const LaurentPoly<Scalar>& p, const LaurentPoly<Scalar>& q) {
  return p + q;
}

template <typename Scalar>
LaurentPoly<Scalar> mul(const LaurentPoly<Scalar>& p, const LaurentPoly<Scalar>& q) {
  return p * q;
}

/// Quotient q with q * d == p. Throws InexactDivision if d does not divide p and
/// std::domain_error if d is zero.
template <typename Scalar>
LaurentPoly<Scalar> exact_div(const LaurentPoly<Scalar>& p, const LaurentPoly<Scalar>& d) {
  p.check_compatible(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const std::size_t n = p.nvars();
  if (p.is_zero()) return LaurentPoly<Scalar>(n);
  if (d.size() == 1) {
    const auto& [m, c] = d.leading_term();
    std::vector<typename LaurentPoly<Scalar>::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) terms.emplace_back(t.first / m, exact_quotient(t.second, c));
    return LaurentPoly<Scalar>::from_terms(n, std::move(terms));
  }

  // Every quotient exponent of x_i must lie in [lo_i(p) - lo_i(d), hi_i(p) - hi_i(d)];
  // leaving that box proves a nonzero remainder and bounds the loop.
  std::vector<std::pair<int, int>> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [plo, phi] = p.degree_range(i);
    auto [dlo, dhi] = d.degree_range(i);
    box[i] = {plo.doubled - dlo.doubled, phi.doubled - dhi.doubled};
  }
  auto in_box = [&](const Monomial& m) {
    for (std::size_t i = 0; i < n; ++i)
      if (m.doubled(i) < box[i].first || m.doubled(i) > box[i].second) return false;
    return true;
  };

  const auto& [lead_m, lead_c] = d.leading_term();
  std::map<Monomial, Scalar> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.first, t.second);
  std::vector<typename LaurentPoly<Scalar>::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Monomial qm = top->first / lead_m;
    if (!in_box(qm)) throw InexactDivision("polynomial division leaves a nonzero remainder");
    const Scalar qc = exact_quotient(top->second, lead_c);
    for (const auto& [m, c] : d.terms()) {
      auto [it, inserted] = rem.try_emplace(m * qm, Scalar(0));
      it->second -= qc * c;
      if (is_zero(it->second)) rem.erase(it);
    }
    quotient.emplace_back(qm, qc);
  }
  return LaurentPoly<Scalar>::from_terms(n, std::move(quotient));
}

/// Image of one variable under a substitution: x_i -> coeff * y_target^exponent,
/// or the constant coeff when target is empty.
struct VariableImage {
  Rational coeff = 1;
  std::optional<std::size_t> target;
  int exponent = 1;

  static VariableImage var(std::size_t j, int exponent = 1, Rational coeff = 1) {
    return VariableImage{std::move(coeff), j, exponent};
  }
  static VariableImage constant(Rational c) { return VariableImage{std::move(c), std::nullopt, 0}; }
};

/// Per-variable ring map into a ring with out_nvars variables.
struct Substitution {
  std::size_t out_nvars = 0;
  std::vector<VariableImage> images;

  static Substitution identity(std::size_t n) {
    Substitution s{n, {}};
    for (std::size_t i = 0; i < n; ++i) s.images.push_back(VariableImage::var(i));
    return s;
  }
};

namespace detail {

// coeff^{d/2}, cached per variable. Odd d needs coeff to be a rational square.
class PowerCache {
 public:
  explicit PowerCache(Rational base) : base_(std::move(base)) {}

  const Rational& get(int doubled) {
    auto it = cache_.find(doubled);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(doubled, compute(doubled)).first->second;
  }

 private:
  Rational compute(int doubled) const {
    if (doubled == 0) return Rational(1);
    if (sgn(base_) == 0 && doubled < 0)
      throw std::domain_error("substituting 0 for a variable with a negative exponent");
    if (doubled % 2 == 0) return power(base_, doubled / 2);
    auto root = exact_sqrt(base_);
    if (!root) throw std::domain_error("half-integer exponent at a value that is not a rational square: " + to_string(base_));
    return power(*root, doubled);
  }

  Rational base_;
  std::map<int, Rational> cache_;
};

}  // namespace detail

/// Applies a per-variable substitution; x_i -> x_i^{-1} is an involution.
template <typename Scalar>
LaurentPoly<Scalar> substitute(const LaurentPoly<Scalar>& p, const Substitution& s) {
  if (s.images.size() != p.nvars()) throw std::invalid_argument("substitution arity does not match the polynomial");
  std::vector<detail::PowerCache> caches;
  caches.reserve(s.images.size());
  for (const auto& img : s.images) {
    if (img.target && *img.target >= s.out_nvars) throw std::out_of_range("substitution target out of range");
    caches.emplace_back(img.coeff);
  }
  std::vector<typename LaurentPoly<Scalar>::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial out;
    std::vector<int> acc(s.out_nvars, 0);
    Rational factor = 1;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const int d = m.doubled(i);
      if (d == 0) continue;
      const auto& img = s.images[i];
      factor *= caches[i].get(d);
      if (img.target) acc[*img.target] += img.exponent * d;
    }
    for (std::size_t j = 0; j < s.out_nvars; ++j) out.set(j, HalfExp{acc[j]});
    terms.emplace_back(out, c * scalar_from_rational<Scalar>(factor));
  }
  return LaurentPoly<Scalar>::from_terms(s.out_nvars, std::move(terms));
}

/// Exact value at a point. Half-integer exponents take the non-negative square root and
/// require the coordinate to be a rational square.
template <typename Scalar>
Rational eval_rational(const LaurentPoly<Scalar>& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw std::invalid_argument("evaluation point has the wrong dimension");
  std::vector<detail::PowerCache> caches;
  caches.reserve(point.size());
  for (const auto& v : point) caches.emplace_back(v);
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = to_rational(c);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (m.doubled(i) != 0) term *= caches[i].get(m.doubled(i));
    sum += term;
  }
  return sum;
}

/// Canonical text form: "coeff * x1^{a/2} * x2^{b/2} + ...", leading term first,
/// exponents written doubled over 2, zero exponents omitted.
template <typename Scalar>
std::string to_string(const LaurentPoly<Scalar>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(it->second);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      const int d = it->first.doubled(i);
      if (d != 0) out += " * x" + std::to_string(i + 1) + "^{" + std::to_string(d) + "/2}";
    }
  }
  return out;
}

/// Converts coefficients between rings (exactness enforced by scalar_from_rational).
template <typename To, typename From>
LaurentPoly<To> convert(const LaurentPoly<From>& p) {
  std::vector<typename LaurentPoly<To>::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, scalar_from_rational<To>(to_rational(c)));
  return LaurentPoly<To>::from_terms(p.nvars(), std::move(terms));
}

}  // namespace charlab
