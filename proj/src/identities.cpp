#include "charlab/identities.hpp"

#include "charlab/config.hpp"

#include <stdexcept>

namespace charlab {

namespace {

template <typename S>
LaurentPoly<S> binomial(std::size_t n, std::size_t a, bool a_inv, std::size_t b, bool b_inv) {
  Monomial ma, mb;
  ma.set(a, HalfExp::integer(a_inv ? -1 : 1));
  mb.set(b, HalfExp::integer(b_inv ? -1 : 1));
  std::vector<typename LaurentPoly<S>::Term> t{{ma, S(1)}, {mb, S(-1)}};
  return LaurentPoly<S>::from_terms(n, std::move(t));
}

template <typename S>
void times_vprod(LaurentPoly<S>& p, const SubsetTerm& a, bool inv) {
  const auto m = a.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) p *= binomial<S>(p.nvars(), m[i], inv, m[j], inv);
}

template <typename S>
void times_rprod(LaurentPoly<S>& p, const SubsetTerm& a, const SubsetTerm& b, bool a_inv, bool b_inv) {
  for (auto i : a.members())
    for (auto j : b.members()) p *= binomial<S>(p.nvars(), i, a_inv, j, b_inv);
}

void check_lemma(int which, int N) {
  if (which < 1 || which > 3) throw std::invalid_argument("lemma must be 1, 2 or 3");
  if (N < (which == 3 ? 0 : 1)) throw std::invalid_argument("lemma " + std::to_string(which) + " needs N >= " + (which == 3 ? "0" : "1"));
  if (lemma_ground(which, N) > 31) throw GuardExceeded("lemma ground set too large");
}

// Summand of either side for subset A, without the weight monomial and sign.
template <typename S>
LaurentPoly<S> lemma_summand(Side side, const SubsetTerm& a, std::size_t k) {
  const SubsetTerm ac = a.complement();
  auto p = LaurentPoly<S>::constant(k, S(1));
  times_vprod(p, a, false);
  times_vprod(p, a, true);
  times_vprod(p, ac, false);
  times_vprod(p, ac, true);
  if (side == Side::lhs) {
    times_rprod(p, a, a, false, true);
    times_rprod(p, ac, ac, false, true);
  } else {
    times_rprod(p, a, ac, false, true);
    times_rprod(p, ac, a, false, true);
  }
  return p;
}

template <typename S>
LaurentPoly<S> lemma_side_t(int which, Side side, int N) {
  const std::size_t k = lemma_ground(which, N);
  LaurentPoly<S> sum(k);
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    const SubsetTerm a(bits, k);
    if (side == Side::lhs && a.size() != static_cast<std::size_t>(N)) continue;
    auto term = lemma_summand<S>(side, a, k);
    if (side == Side::rhs && which >= 2) {
      Monomial w;
      for (std::size_t i = 0; i < k; ++i) w.set(i, HalfExp::integer(a.contains(i) ? -1 : 1));
      const bool negative = which == 3 && (N + static_cast<int>(a.size())) % 2 != 0;
      term = term.times_term(w, S(negative ? -1 : 1));
    }
    sum += term;
  }
  return sum;
}

Rational sqrt_or_throw(const Rational& v) {
  auto r = exact_sqrt(v);
  if (!r) throw std::domain_error("coordinate " + to_string(v) + " is not the square of a rational");
  return *r;
}

Rational half_product_at(std::span<const Rational> x) {
  Rational r = 1;
  for (const auto& v : x) {
    const Rational s = sqrt_or_throw(v);
    r *= s + 1 / s;
  }
  return r;
}

RationalPoly half_product_poly(std::size_t n) {
  auto p = RationalPoly::constant(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    p *= RationalPoly::variable(n, i, HalfExp::halves(1)) + RationalPoly::variable(n, i, HalfExp::halves(-1));
  return p;
}

Substitution negation(std::size_t n) {
  Substitution s{n, {}};
  for (std::size_t i = 0; i < n; ++i) s.images.push_back(VariableImage::var(i, 1, -1));
  return s;
}

Shape rect(HalfExp side, std::size_t rows, std::size_t len) {
  std::vector<HalfExp> parts(rows, side);
  parts.resize(len, HalfExp{});
  return Shape(std::move(parts));
}

// s_{(M^rows)}(x_1, x_1^{-1}, ..., x_n, x_n^{-1}): the 2n-variable Schur polynomial with
// x_{n+i} replaced by x_i^{-1}.
RationalPoly schur_reciprocal_poly(int M, std::size_t rows, std::size_t n) {
  const CharacterSpec spec(Family::gl, rect(HalfExp::integer(M), rows, 2 * n), 2 * n);
  Substitution s{n, {}};
  for (std::size_t i = 0; i < 2 * n; ++i) s.images.push_back(VariableImage::var(i % n, i < n ? 1 : -1));
  return substitute(character_poly(spec), s);
}

Rational schur_reciprocal_at(int M, std::size_t rows, std::span<const Rational> x) {
  const std::size_t n = x.size();
  const CharacterSpec spec(Family::gl, rect(HalfExp::integer(M), rows, 2 * n), 2 * n);
  std::vector<Rational> pt(x.begin(), x.end());
  for (const auto& v : x) pt.push_back(1 / v);
  return character_at(spec, pt);
}

// A character of rectangular shape (side^n) evaluated at x or at -x.
struct RectChar {
  Family family;
  HalfExp side;
  bool negated = false;

  CharacterSpec spec(std::size_t n) const { return CharacterSpec(family, rect(side, n, n), n); }

  RationalPoly poly(std::size_t n) const {
    const auto p = character_poly(spec(n));
    return negated ? substitute(p, negation(n)) : p;
  }
  Rational at(std::span<const Rational> x) const {
    return character_at(spec(x.size()), x, std::vector<bool>(x.size(), negated));
  }
};

std::string param(int v) { return std::to_string(v); }

IdentityInstance uniform_instance(Theorem t, int M, int n) {
  if (M < 0 || n < 1) throw std::invalid_argument("uniform forms need M >= 0 and n >= 1");
  const auto un = static_cast<std::size_t>(n);
  const bool two_schur = t == Theorem::uniform65;
  const HalfExp half_M = HalfExp::halves(M), half_M1 = HalfExp::halves(M + 1);
  // uniform15: so_{(M/2)^n} o^even_{((M+1)/2)^n}; uniform65 swaps the two sides.
  const HalfExp so_side = two_schur ? half_M1 : half_M;
  const HalfExp o_side = two_schur ? half_M : half_M1;
  IdentityInstance inst;
  inst.identity = std::string(to_string(t));
  inst.params = {{"M", param(M)}, {"n", param(n)}};
  inst.nvars = un;
  inst.half_integral = true;
  const RectChar so{Family::so_odd, so_side};
  const bool literal = o_side.doubled == 0;
  inst.lhs_poly = [=] {
    auto s = schur_reciprocal_poly(M, un, un);
    if (two_schur) s += schur_reciprocal_poly(M, un - 1, un);
    return half_product_poly(un) * s;
  };
  inst.lhs_at = [=](std::span<const Rational> x) -> Rational {
    Rational s = schur_reciprocal_at(M, un, x);
    if (two_schur) s += schur_reciprocal_at(M, un - 1, x);
    return half_product_at(x) * s;
  };
  inst.rhs_poly = [=] {
    const auto o = literal ? o_even_literal_poly(rect(HalfExp{}, un, un), un) : RectChar{Family::o_even, o_side}.poly(un);
    return so.poly(un) * o;
  };
  inst.rhs_at = [=](std::span<const Rational> x) -> Rational {
    // The literal ratio at the zero shape is the constant 2.
    const Rational o = literal ? Rational(2) : RectChar{Family::o_even, o_side}.at(x);
    return so.at(x) * o;
  };
  if (literal) inst.note = "o^even_{(0^n)} is taken as the literal determinant ratio 2 det/det = 2";
  return inst;
}

}  // namespace

SubsetTerm::SubsetTerm(std::uint32_t bits, std::size_t k) : bits_(bits), k_(k) {
  if (k > 31) throw std::invalid_argument("subset ground set too large");
  if (bits >> k) throw std::invalid_argument("subset has elements outside its ground set");
}

SubsetTerm SubsetTerm::of(std::initializer_list<std::size_t> one_based, std::size_t k) {
  std::uint32_t bits = 0;
  for (auto i : one_based) {
    if (i < 1 || i > k) throw std::invalid_argument("subset element out of range");
    bits |= 1u << (i - 1);
  }
  return SubsetTerm(bits, k);
}

SubsetTerm SubsetTerm::complement() const { return SubsetTerm(~bits_ & ((1u << k_) - 1), k_); }

std::vector<std::size_t> SubsetTerm::members() const {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < k_; ++i)
    if (contains(i)) m.push_back(i);
  return m;
}

RationalPoly vprod(const SubsetTerm& a, bool inverted, std::size_t nvars) {
  if (a.ground() > nvars) throw std::invalid_argument("subset ground set exceeds the variable count");
  auto p = RationalPoly::constant(nvars, 1);
  times_vprod(p, a, inverted);
  return p;
}

RationalPoly rprod(const SubsetTerm& a, const SubsetTerm& b, bool a_inverted, bool b_inverted, std::size_t nvars) {
  if (a.ground() > nvars || b.ground() > nvars) throw std::invalid_argument("subset ground set exceeds the variable count");
  auto p = RationalPoly::constant(nvars, 1);
  times_rprod(p, a, b, a_inverted, b_inverted);
  return p;
}

std::size_t lemma_ground(int which, int N) { return static_cast<std::size_t>(2 * N + (which == 3 ? 1 : 0)); }

RationalPoly lemma_side(int which, Side side, int N) {
  check_lemma(which, N);
  if (lemma_ground(which, N) > max_symbolic_vars())
    throw GuardExceeded("symbolic lemma expansion is limited to " + std::to_string(max_symbolic_vars()) + " variables");
  try {
    return convert<Rational>(lemma_side_t<CheckedInt64>(which, side, N));
  } catch (const std::overflow_error&) {
    return convert<Rational>(lemma_side_t<Integer>(which, side, N));
  }
}

Rational lemma_side_at(int which, Side side, int N, std::span<const Rational> x) {
  check_lemma(which, N);
  const std::size_t k = lemma_ground(which, N);
  if (x.size() != k) throw std::invalid_argument("lemma point has the wrong dimension");
  std::vector<Rational> inv(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (is_zero(x[i])) throw std::domain_error("lemma point coordinates must be nonzero");
    inv[i] = 1 / x[i];
  }
  // diff[i][j] = x_i - x_j, idiff[i][j] = x_i^{-1} - x_j^{-1}, mixed[i][j] = x_i - x_j^{-1}.
  std::vector<std::vector<Rational>> diff(k, std::vector<Rational>(k)), idiff = diff, mixed = diff;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      diff[i][j] = x[i] - x[j];
      idiff[i][j] = inv[i] - inv[j];
      mixed[i][j] = x[i] - inv[j];
    }
  Rational sum = 0;
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    const SubsetTerm a(bits, k);
    if (side == Side::lhs && a.size() != static_cast<std::size_t>(N)) continue;
    const auto in = a.members();
    const auto out = a.complement().members();
    Rational term = 1;
    for (const auto* group : {&in, &out})
      for (std::size_t i = 0; i < group->size(); ++i)
        for (std::size_t j = i + 1; j < group->size(); ++j) term *= diff[(*group)[i]][(*group)[j]] * idiff[(*group)[i]][(*group)[j]];
    const auto& r1 = side == Side::lhs ? in : out;
    const auto& r2 = side == Side::lhs ? out : in;
    for (auto i : in)
      for (auto j : r1) term *= mixed[i][j];
    for (auto i : out)
      for (auto j : r2) term *= mixed[i][j];
    if (side == Side::rhs && which >= 2) {
      for (std::size_t i = 0; i < k; ++i) term *= a.contains(i) ? inv[i] : x[i];
      if (which == 3 && (N + static_cast<int>(a.size())) % 2 != 0) term = -term;
    }
    sum += term;
  }
  return sum;
}

bool degree_bound_check(int which, int N) {
  const int bound = which == 3 ? 2 * N + 1 : 2 * N - 1;
  for (auto side : {Side::lhs, Side::rhs}) {
    const auto [lo, hi] = lemma_side(which, side, N).degree_range(0);
    if (lo < HalfExp::integer(-bound) || hi > HalfExp::integer(bound)) return false;
  }
  return true;
}

std::string_view to_string(Mode m) { return m == Mode::symbolic ? "symbolic" : "random"; }

Mode parse_mode(std::string_view text) {
  if (text == "symbolic") return Mode::symbolic;
  if (text == "random") return Mode::randomized;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected symbolic or random)");
}

std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t nvars, bool squares) {
  constexpr std::uint64_t kRange = 1000000;
  std::vector<Rational> pt;
  while (pt.size() < nvars) {
    const std::uint64_t p = 1 + rng() % kRange, q = 1 + rng() % kRange;
    const bool negative = rng() & 1u;
    Rational v(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    v.canonicalize();
    if (squares) v *= v;
    else if (negative) v = -v;
    bool ok = v != 1 && v != -1;
    for (const auto& w : pt) ok = ok && v != w && v * w != 1;
    if (ok) pt.push_back(v);
  }
  return pt;
}

VerificationReport verify_instance(const IdentityInstance& inst, Mode mode, int trials, std::uint64_t seed) {
  VerificationReport r;
  r.identity = inst.identity;
  r.params = inst.params;
  r.mode = mode;
  r.seed = seed;
  r.note = inst.note;
  std::mt19937_64 rng(seed);
  if (mode == Mode::symbolic) {
    r.trials = 1;
    const auto lhs = inst.lhs_poly();
    const auto rhs = inst.rhs_poly();
    if (lhs == rhs) return r;
    Counterexample ce{{}, to_string(lhs), to_string(rhs)};
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto pt = random_point(rng, inst.nvars, inst.half_integral || !lhs.is_integral() || !rhs.is_integral());
      const auto a = eval_rational(lhs, std::span<const Rational>(pt));
      const auto b = eval_rational(rhs, std::span<const Rational>(pt));
      if (a != b) {
        ce = {std::move(pt), to_string(a), to_string(b)};
        break;
      }
    }
    r.counterexample = std::move(ce);
    return r;
  }
  if (trials < 1) throw std::invalid_argument("randomized verification needs at least one trial");
  r.trials = trials;
  for (int t = 0; t < trials; ++t) {
    auto pt = random_point(rng, inst.nvars, inst.half_integral);
    const auto a = inst.lhs_at(pt);
    const auto b = inst.rhs_at(pt);
    if (a != b) {
      r.counterexample = Counterexample{std::move(pt), to_string(a), to_string(b)};
      break;
    }
  }
  return r;
}

VerificationReport verify_lemma(int which, int N, Mode mode, int trials, std::uint64_t seed) {
  check_lemma(which, N);
  IdentityInstance inst;
  inst.identity = "lemma" + std::to_string(which);
  inst.params = {{"N", param(N)}};
  inst.nvars = lemma_ground(which, N);
  inst.lhs_poly = [=] { return lemma_side(which, Side::lhs, N); };
  inst.rhs_poly = [=] { return lemma_side(which, Side::rhs, N); };
  inst.lhs_at = [=](std::span<const Rational> x) -> Rational { return lemma_side_at(which, Side::lhs, N, x); };
  inst.rhs_at = [=](std::span<const Rational> x) -> Rational { return lemma_side_at(which, Side::rhs, N, x); };
  return verify_instance(inst, mode, trials, seed);
}

namespace {

struct TheoremName {
  Theorem t;
  std::string_view text;
};
constexpr TheoremName kTheoremNames[] = {{Theorem::thm1, "thm1"},           {Theorem::thm2, "thm2"},
                                         {Theorem::thm3, "thm3"},           {Theorem::thm4, "thm4"},
                                         {Theorem::uniform15, "uniform15"}, {Theorem::uniform65, "uniform65"}};

}  // namespace

std::string_view to_string(Theorem t) {
  for (const auto& [v, text] : kTheoremNames)
    if (v == t) return text;
  throw std::invalid_argument("unknown theorem");
}

Theorem parse_theorem(std::string_view text) {
  for (const auto& [v, name] : kTheoremNames)
    if (name == text) return v;
  throw std::invalid_argument("unknown identity '" + std::string(text) + "'");
}

IdentityInstance theorem_instance(Theorem t, int m, int n) {
  if (t == Theorem::uniform15 || t == Theorem::uniform65) return uniform_instance(t, m, n);
  if (m < 0 || n < 1) throw std::invalid_argument("theorems need m >= 0 and n >= 1");
  if (t == Theorem::thm4 && m == 0) {
    auto inst = uniform_instance(Theorem::uniform65, 0, n);
    inst.identity = "thm4";
    inst.params = {{"m", "0"}, {"n", param(n)}};
    inst.note = "m = 0 needs o^even_{(0^n)}, which is not an irreducible character with the factor-2 normalization; "
                "verified the uniform form with M = 0 instead, taking o^even_{(0^n)} as the literal ratio 2";
    return inst;
  }
  const auto un = static_cast<std::size_t>(n);
  const HalfExp hm = HalfExp::integer(m), hm1 = HalfExp::integer(m + 1);
  int M = 0;
  bool two_schur = false;
  int sign = 1;
  RectChar f1{Family::gl, {}}, f2{Family::gl, {}};
  switch (t) {
    case Theorem::thm1:
      M = 2 * m;
      sign = (m * n) % 2 ? -1 : 1;
      f1 = {Family::so_odd, hm};
      f2 = {Family::so_odd, hm, true};
      break;
    case Theorem::thm2:
      M = 2 * m + 1;
      f1 = {Family::sp, hm};
      f2 = {Family::o_even, hm1};
      break;
    case Theorem::thm3:
      M = 2 * m + 1;
      two_schur = true;
      sign = (m * n) % 2 ? -1 : 1;
      f1 = {Family::so_odd, hm1};
      f2 = {Family::so_odd, hm, true};
      break;
    case Theorem::thm4:
      M = 2 * m;
      two_schur = true;
      f1 = {Family::sp, hm};
      f2 = {Family::o_even, hm};
      break;
    default:
      throw std::invalid_argument("unknown theorem");
  }
  IdentityInstance inst;
  inst.identity = std::string(to_string(t));
  inst.params = {{"m", param(m)}, {"n", param(n)}};
  inst.nvars = un;
  inst.lhs_poly = [=] {
    auto s = schur_reciprocal_poly(M, un, un);
    if (two_schur) s += schur_reciprocal_poly(M, un - 1, un);
    return s;
  };
  inst.lhs_at = [=](std::span<const Rational> x) -> Rational {
    Rational s = schur_reciprocal_at(M, un, x);
    if (two_schur) s += schur_reciprocal_at(M, un - 1, x);
    return s;
  };
  inst.rhs_poly = [=] { return (f1.poly(un) * f2.poly(un)).times_term(Monomial{}, sign); };
  inst.rhs_at = [=](std::span<const Rational> x) -> Rational { return sign * f1.at(x) * f2.at(x); };
  return inst;
}

VerificationReport verify_theorem(Theorem t, int m, int n, Mode mode, int trials, std::uint64_t seed) {
  return verify_instance(theorem_instance(t, m, n), mode, trials, seed);
}

std::string_view to_string(Bridge b) { return b == Bridge::eq13 ? "eq13" : "eq14"; }

Bridge parse_bridge(std::string_view text) {
  if (text == "eq13") return Bridge::eq13;
  if (text == "eq14") return Bridge::eq14;
  throw std::invalid_argument("unknown bridge identity '" + std::string(text) + "'");
}

IdentityInstance bridge_instance(Bridge b, const Shape& lambda) {
  if (!lambda.is_partition() || lambda.empty()) throw std::invalid_argument("bridge identities need a non-empty partition");
  const std::size_t n = lambda.length();
  const CharacterSpec left(b == Bridge::eq13 ? Family::so_odd : Family::sp, lambda, n);
  const CharacterSpec right(b == Bridge::eq13 ? Family::o_even : Family::so_odd, lambda.plus_half(), n);
  const int sign = (b == Bridge::eq13 && lambda.weight().doubled / 2 % 2 != 0) ? -1 : 1;
  const bool negate = b == Bridge::eq13;
  IdentityInstance inst;
  inst.identity = std::string(to_string(b));
  inst.params = {{"shape", to_string(lambda)}};
  inst.nvars = n;
  inst.half_integral = true;
  inst.lhs_poly = [=] {
    auto p = character_poly(left);
    if (negate) p = substitute(p, negation(n));
    return (p * half_product_poly(n)).times_term(Monomial{}, sign);
  };
  inst.rhs_poly = [=] { return character_poly(right); };
  inst.lhs_at = [=](std::span<const Rational> x) -> Rational {
    return sign * character_at(left, x, std::vector<bool>(n, negate)) * half_product_at(x);
  };
  inst.rhs_at = [=](std::span<const Rational> x) -> Rational { return character_at(right, x); };
  return inst;
}

VerificationReport verify_bridge(Bridge b, const Shape& lambda, Mode mode, int trials, std::uint64_t seed) {
  return verify_instance(bridge_instance(b, lambda), mode, trials, seed);
}

}  // namespace charlab
