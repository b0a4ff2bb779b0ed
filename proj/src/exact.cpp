#include "charlab/exact.hpp"
#include "charlab/laurent.hpp"

#include <charconv>

namespace charlab {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(CheckedInt64 z) { return std::to_string(z.value()); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  Integer z;
  z.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10);
  return z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("sign in denominator: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer num = sqrt(r.get_num());
  Integer den = sqrt(r.get_den());
  return Rational(num, den);
}

Rational power(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  const unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational r = e < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();  // moves the sign into the numerator
  return r;
}

std::string to_string(HalfExp e) {
  if (e.is_integral()) return std::to_string(e.doubled / 2);
  return std::to_string(e.doubled) + "/2";
}

HalfExp parse_half_exp(std::string_view text) {
  const Rational r = parse_rational(text);
  const Rational twice = r * 2;
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p())
    throw std::invalid_argument("not an integer or half-integer: '" + std::string(text) + "'");
  return HalfExp{static_cast<int>(twice.get_num().get_si())};
}

}  // namespace charlab
