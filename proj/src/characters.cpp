#include "charlab/characters.hpp"

#include "charlab/config.hpp"

#include <stdexcept>
#include <string>

namespace charlab {

namespace {

using Poly = RationalPoly;

struct FamilyName {
  Family family;
  std::string_view text;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::gl, "gl"}, {Family::so_odd, "so-odd"}, {Family::sp, "sp"}, {Family::o_even, "o-even"}, {Family::so_even, "so-even"},
};

// Exponent pattern of one family: entry x_h^{l_t + N - t + shift} + bar * x_h^{-(...)}.
struct Pattern {
  HalfExp shift;
  int bar;
};

// Numerator patterns and denominator pattern per family. so-even is the only family
// with two numerators.
struct FamilyPatterns {
  std::vector<Pattern> numerators;
  Pattern denominator;
  int scale;
};

FamilyPatterns patterns(Family f) {
  switch (f) {
    case Family::gl:
      return {{{HalfExp{}, 0}}, {HalfExp{}, 0}, 1};
    case Family::so_odd:
      return {{{HalfExp::halves(1), -1}}, {HalfExp::halves(1), -1}, 1};
    case Family::sp:
      return {{{HalfExp::integer(1), -1}}, {HalfExp::integer(1), -1}, 1};
    case Family::o_even:
      return {{{HalfExp{}, 1}}, {HalfExp{}, 1}, 2};
    case Family::so_even:
      return {{{HalfExp{}, 1}, {HalfExp{}, -1}}, {HalfExp{}, 1}, 1};
  }
  throw std::invalid_argument("unknown family");
}

Alternant make_alternant(const Shape& lambda, Pattern p) {
  const std::size_t n = lambda.length();
  Alternant a;
  a.bar = p.bar;
  for (std::size_t t = 0; t < n; ++t)
    a.exponents.push_back(lambda[t] + HalfExp::integer(static_cast<int>(n - 1 - t)) + p.shift);
  const bool integral = a.exponents.empty() || a.exponents.front().is_integral();
  a.row_shift = integral ? HalfExp{} : HalfExp::halves(1);
  return a;
}

Shape zero_shape(std::size_t n) { return Shape(std::vector<HalfExp>(n, HalfExp{})); }

Poly prefactor(std::size_t n, HalfExp e, const Rational& c) {
  Monomial m;
  for (std::size_t i = 0; i < n; ++i) m.set(i, e);
  return Poly::monomial(n, m, c);
}

Poly binomial(std::size_t n, const Monomial& a, const Monomial& b) {
  return Poly::monomial(n, a) - Poly::monomial(n, b);
}

Monomial var_mono(std::initializer_list<std::pair<std::size_t, int>> exps) {
  Monomial m;
  for (auto [i, e] : exps) m.set(i, HalfExp::integer(e));
  return m;
}

Poly divide_by_factors(Poly p, const std::vector<Poly>& factors) {
  for (const auto& f : factors) p = exact_div(p, f);
  return p;
}

Poly quotient_poly(const AlternantQuotient& q, std::size_t n) {
  Poly num(n);
  for (const auto& a : q.numerators) num += determinant<Rational>(alternant_matrix(a, n), n);
  num = num.times_term(Monomial{}, q.scale);
  return exact_div(num, determinant<Rational>(alternant_matrix(q.denominator, n), n));
}

void check_symbolic_guard(std::size_t n) {
  if (n > max_symbolic_vars())
    throw GuardExceeded("symbolic characters are limited to " + std::to_string(max_symbolic_vars()) +
                        " variables; evaluate at a point instead");
}

DenseMatrix<Rational> shifted_matrix(const Alternant& a, std::span<const Rational> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  DenseMatrix<Rational> m(n, n);
  for (Eigen::Index h = 0; h < n; ++h)
    for (Eigen::Index t = 0; t < n; ++t) {
      const HalfExp e = a.exponents[static_cast<std::size_t>(t)];
      const auto& v = values[static_cast<std::size_t>(h)];
      Rational entry = power(v, (e + a.row_shift).doubled / 2);
      if (a.bar != 0) entry += a.bar * power(v, (-e + a.row_shift).doubled / 2);
      m(h, t) = entry;
    }
  return m;
}

// Row h (1-based) of the matrix under x_h = q^h, or x_h = -q^{h-1} when negated.
DenseMatrix<Poly> specialized_matrix(const Alternant& a, std::size_t n, bool negate) {
  const auto size = static_cast<Eigen::Index>(n);
  DenseMatrix<Poly> m(size, size);
  auto power_of_x = [&](int h, int k) {
    const int base = negate ? h - 1 : h;
    const Rational sign = (negate && k % 2 != 0) ? -1 : 1;
    return Poly::monomial(1, var_mono({{0, base * k}}), sign);
  };
  for (Eigen::Index h = 0; h < size; ++h)
    for (Eigen::Index t = 0; t < size; ++t) {
      const HalfExp e = a.exponents[static_cast<std::size_t>(t)];
      const int row = static_cast<int>(h) + 1;
      Poly entry = power_of_x(row, (e + a.row_shift).doubled / 2);
      if (a.bar != 0) entry += power_of_x(row, (-e + a.row_shift).doubled / 2).times_term(Monomial{}, a.bar);
      m(h, t) = entry;
    }
  return m;
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, text] : kFamilyNames)
    if (family == f) return text;
  throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view text) {
  for (const auto& [family, name] : kFamilyNames)
    if (name == text) return family;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected gl, so-odd, sp, o-even or so-even)");
}

CharacterSpec::CharacterSpec(Family family, Shape shape, std::size_t nvars)
    : family_(family), shape_(std::move(shape)), nvars_(nvars) {
  const std::string desc = std::string(to_string(family)) + " shape (" + to_string(shape_) + ")";
  if (nvars_ < 1) throw std::invalid_argument("a character needs at least one variable");
  if (shape_.length() != nvars_)
    throw std::invalid_argument(desc + " has length " + std::to_string(shape_.length()) + " but " + std::to_string(nvars_) +
                                " variables were given");
  const HalfExp last = shape_[nvars_ - 1];
  switch (family_) {
    case Family::gl:
    case Family::sp:
      if (!shape_.is_partition()) throw std::invalid_argument(desc + " must be a partition");
      break;
    case Family::so_odd:
      if (last.doubled < 0) throw std::invalid_argument(desc + " must have non-negative parts");
      break;
    case Family::o_even:
      if (last.doubled <= 0)
        throw std::invalid_argument(desc + " needs lambda_N > 0: for lambda_N = 0 the factor 2 in front of the "
                                           "determinant ratio doubles the character, so it would have to be halved; "
                                           "use so-even instead");
      break;
    case Family::so_even:
      if (nvars_ >= 2 && shape_[nvars_ - 2].doubled < std::abs(last.doubled))
        throw std::invalid_argument(desc + " needs lambda_{N-1} >= |lambda_N|");
      break;
  }
}

HalfExp AlternantQuotient::correction() const {
  return denominator.row_shift - numerators.front().row_shift;
}

AlternantQuotient alternant_quotient(const CharacterSpec& spec) {
  const auto pat = patterns(spec.family());
  AlternantQuotient q;
  for (const auto& p : pat.numerators) q.numerators.push_back(make_alternant(spec.shape(), p));
  q.denominator = make_alternant(zero_shape(spec.nvars()), pat.denominator);
  q.scale = pat.scale;
  return q;
}

DenseMatrix<RationalPoly> alternant_matrix(const Alternant& a, std::size_t nvars) {
  const auto n = static_cast<Eigen::Index>(nvars);
  if (a.exponents.size() != nvars) throw std::invalid_argument("alternant size does not match the variable count");
  DenseMatrix<Poly> m(n, n);
  for (Eigen::Index h = 0; h < n; ++h)
    for (Eigen::Index t = 0; t < n; ++t) {
      const HalfExp e = a.exponents[static_cast<std::size_t>(t)];
      const auto i = static_cast<std::size_t>(h);
      Poly entry = Poly::variable(nvars, i, e);
      if (a.bar != 0) entry += Poly::variable(nvars, i, -e).times_term(Monomial{}, a.bar);
      m(h, t) = entry;
    }
  return m;
}

std::vector<RationalPoly> weyl_denominator_factors(Family family, std::size_t n) {
  if (n < 1) throw std::invalid_argument("the Weyl denominator needs at least one variable");
  std::vector<Poly> f;
  const int k = static_cast<int>(n);
  switch (family) {
    case Family::gl:
      f.push_back(Poly::constant(n, 1));
      break;
    case Family::so_odd:
      f.push_back(prefactor(n, HalfExp::integer(-k) + HalfExp::halves(1), 1));
      break;
    case Family::sp:
      f.push_back(prefactor(n, HalfExp::integer(-k), 1));
      break;
    case Family::o_even:
    case Family::so_even:
      f.push_back(prefactor(n, HalfExp::integer(-k + 1), 2));
      break;
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t t = h + 1; t < n; ++t) {
      f.push_back(binomial(n, var_mono({{h, 1}}), var_mono({{t, 1}})));
      if (family != Family::gl) f.push_back(binomial(n, var_mono({{h, 1}, {t, 1}}), Monomial{}));
    }
  if (family == Family::so_odd)
    for (std::size_t h = 0; h < n; ++h) f.push_back(binomial(n, var_mono({{h, 1}}), Monomial{}));
  if (family == Family::sp)
    for (std::size_t h = 0; h < n; ++h) f.push_back(binomial(n, var_mono({{h, 2}}), Monomial{}));
  return f;
}

RationalPoly weyl_denominator(Family family, std::size_t n) {
  Poly p = Poly::constant(n, 1);
  for (const auto& f : weyl_denominator_factors(family, n)) p *= f;
  return p;
}

RationalPoly weyl_denominator_determinant(Family family, std::size_t n) {
  if (n < 1) throw std::invalid_argument("the Weyl denominator needs at least one variable");
  const CharacterSpec spec(family == Family::o_even ? Family::so_even : family, zero_shape(n), n);
  return determinant<Rational>(alternant_matrix(alternant_quotient(spec).denominator, n), n);
}

RationalPoly character_poly(const CharacterSpec& spec) {
  const std::size_t n = spec.nvars();
  check_symbolic_guard(n);
  const auto q = alternant_quotient(spec);
  Poly num(n);
  for (const auto& a : q.numerators) num += determinant<Rational>(alternant_matrix(a, n), n);
  num = num.times_term(Monomial{}, q.scale);
  return divide_by_factors(std::move(num), weyl_denominator_factors(spec.family(), n));
}

RationalPoly o_even_literal_poly(const Shape& shape, std::size_t nvars) {
  check_symbolic_guard(nvars);
  if (shape.length() != nvars || nvars < 1) throw std::invalid_argument("shape length must equal the variable count");
  const auto pat = patterns(Family::o_even);
  AlternantQuotient q;
  q.numerators.push_back(make_alternant(shape, pat.numerators.front()));
  q.denominator = make_alternant(zero_shape(nvars), pat.denominator);
  q.scale = 2;
  return quotient_poly(q, nvars);
}

Rational character_at(const CharacterSpec& spec, std::span<const Rational> point, const std::vector<bool>& negate) {
  const std::size_t n = spec.nvars();
  if (point.size() != n) throw std::invalid_argument("point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(n));
  if (!negate.empty() && negate.size() != n) throw std::invalid_argument("negation flags do not match the variable count");
  std::vector<Rational> values(point.begin(), point.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(values[i])) throw std::domain_error("point coordinates must be nonzero");
    if (!negate.empty() && negate[i]) values[i] = -values[i];
  }
  const auto q = alternant_quotient(spec);
  const Rational den = determinant(shifted_matrix(q.denominator, values));
  if (is_zero(den))
    throw SingularDenominator("the Weyl denominator vanishes at this point; use the principal specialization (q -> 1) instead");
  Rational num = 0;
  for (const auto& a : q.numerators) num += determinant(shifted_matrix(a, values));
  Rational result = q.scale * num / den;
  const HalfExp corr = q.correction();
  for (const auto& v : values) {
    if (corr.is_integral()) {
      result *= power(v, corr.doubled / 2);
    } else {
      auto root = exact_sqrt(v);
      if (!root) throw std::domain_error("half-integer weight needs coordinates that are squares of rationals, got " + to_string(v));
      result *= power(*root, corr.doubled);
    }
  }
  return result;
}

Integer principal_specialization(const CharacterSpec& spec, bool negate) {
  const std::size_t n = spec.nvars();
  const auto q = alternant_quotient(spec);
  const HalfExp corr = q.correction();
  if (negate && !corr.is_integral())
    throw std::domain_error("negated principal specialization is ambiguous for half-integer weights of this family");
  const Poly den = determinant<Rational>(specialized_matrix(q.denominator, n, negate), 1);
  if (den.is_zero()) throw SingularDenominator("the Weyl denominator vanishes identically under this specialization");
  Poly num(1);
  for (const auto& a : q.numerators) num += determinant<Rational>(specialized_matrix(a, n, negate), 1);
  const Poly quotient = exact_div(num.times_term(Monomial{}, q.scale), den);
  Rational value = 0;
  for (const auto& [m, c] : quotient.terms()) value += c;
  // Each x_h^{corr} tends to 1, or to (-1)^{corr} when negated.
  if (negate && (static_cast<long>(n) * (corr.doubled / 2)) % 2 != 0) value = -value;
  if (value.get_den() != 1) throw InexactDivision("principal specialization is not an integer: " + to_string(value));
  return value.get_num();
}

Rational sp_dimension_product(int m, int N) {
  if (m < 0 || N < 0) throw std::invalid_argument("sp_dimension_product needs m, N >= 0");
  Rational r = 1;
  for (int h = 1; h <= N + 1; ++h)
    for (int t = h + 1; t <= N + 1; ++t) r *= Rational(2 * m + 2 * N + 3 - h - t, 2 * N + 3 - h - t);
  r.canonicalize();
  return r;
}

Rational spp_star_product(int m, int n) {
  if (m < 0 || n < 1) throw std::invalid_argument("spp_star_product needs m >= 0 and n >= 1");
  Rational r = 2;
  for (int h = 1; h <= n; ++h)
    for (int t = h + 1; t <= n; ++t) r *= Rational(2 * m + 2 * n - h - t, 2 * n - h - t);
  r.canonicalize();
  return r;
}

namespace {

template <typename Fn>
void for_each_admissible(HalfExp c, std::size_t nvars, OddColumnsMode mode, Fn&& fn) {
  if (c.doubled < 0) throw std::invalid_argument("c must be non-negative");
  if (nvars < 1) throw std::invalid_argument("at least one variable is required");
  const int width = c.doubled;
  const Shape box = rectangle(HalfExp::integer(width), nvars);
  const std::size_t want = mode == OddColumnsMode::zero ? 0 : static_cast<std::size_t>(width);
  for (const auto& nu : subshapes_of_rectangle(width, nvars))
    if (odd_columns(SkewDiagram(box, nu)) == want) fn(nu);
}

}  // namespace

RationalPoly so_even_schur_sum(HalfExp c, std::size_t nvars, OddColumnsMode mode) {
  check_symbolic_guard(nvars);
  Poly sum(nvars);
  for_each_admissible(c, nvars, mode, [&](const Shape& nu) { sum += character_poly(CharacterSpec(Family::gl, nu, nvars)); });
  return sum * prefactor(nvars, -c, 1);
}

Integer so_even_schur_sum_at_ones(HalfExp c, std::size_t nvars, OddColumnsMode mode) {
  Integer sum = 0;
  for_each_admissible(c, nvars, mode,
                      [&](const Shape& nu) { sum += principal_specialization(CharacterSpec(Family::gl, nu, nvars)); });
  return sum;
}

}  // namespace charlab
