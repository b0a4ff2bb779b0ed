#include "charlab/identities.hpp"

#include "doctest.h"

using namespace charlab;

namespace {

RationalPoly x(std::size_t n, std::size_t i, int e = 1) { return RationalPoly::variable(n, i, HalfExp::integer(e)); }
RationalPoly c(std::size_t n, long v) { return RationalPoly::constant(n, v); }

Substitution swap12(std::size_t n) {
  auto s = Substitution::identity(n);
  s.images[0] = VariableImage::var(1);
  s.images[1] = VariableImage::var(0);
  return s;
}

}  // namespace

TEST_CASE("subset terms") {
  const auto a = SubsetTerm::of({1, 3}, 4);
  CHECK(a.size() == 2);
  CHECK(a.members() == std::vector<std::size_t>{0, 2});
  CHECK(a.complement().members() == std::vector<std::size_t>{1, 3});
  CHECK((a.bits() | a.complement().bits()) == 0xFu);
  CHECK((a.bits() & a.complement().bits()) == 0u);
  CHECK_THROWS(SubsetTerm::of({5}, 4));
}

TEST_CASE("Vandermonde and resultant products") {
  const SubsetTerm none(0, 2);
  const auto a12 = SubsetTerm::of({1, 2}, 2);
  CHECK(vprod(none, false, 2) == c(2, 1));
  CHECK(vprod(a12, false, 2) == x(2, 0) - x(2, 1));
  CHECK(vprod(a12, true, 2) == x(2, 0, -1) - x(2, 1, -1));
  CHECK(rprod(none, a12, false, true, 2) == c(2, 1));
  CHECK(rprod(SubsetTerm::of({1}, 2), SubsetTerm::of({1}, 2), false, true, 2) == x(2, 0) - x(2, 0, -1));
  CHECK(rprod(SubsetTerm::of({1}, 2), SubsetTerm::of({2}, 2), false, true, 2) == x(2, 0) - x(2, 1, -1));
}

TEST_CASE("lemma sides at the smallest sizes") {
  const auto lhs1 = lemma_side(1, Side::lhs, 1);
  CHECK(lhs1 == ((x(2, 0) - x(2, 0, -1)) * (x(2, 1) - x(2, 1, -1))).times_term(Monomial{}, 2));
  const auto l3 = x(1, 0) - x(1, 0, -1);
  CHECK(lemma_side(3, Side::lhs, 0) == l3);
  CHECK(lemma_side(3, Side::rhs, 0) == l3);
  // Four-term expansion of the weighted right side at N = 1.
  const auto x1 = x(2, 0), x2 = x(2, 1), y1 = x(2, 0, -1), y2 = x(2, 1, -1);
  const auto rhs2 = x1 * x2 * (x1 - x2) * (y1 - y2) + x1 * y2 * (x1 - y2) * (x2 - y1) + y1 * x2 * (x2 - y1) * (x1 - y2) +
                    y1 * y2 * (y1 - y2) * (x1 - x2);
  CHECK(lemma_side(2, Side::rhs, 1) == rhs2);
  CHECK_THROWS(lemma_side(1, Side::lhs, 0));
  CHECK_THROWS(lemma_side(4, Side::lhs, 1));
}

TEST_CASE("lemmas hold symbolically for small N") {
  for (int which = 1; which <= 3; ++which)
    for (int N = which == 3 ? 0 : 1; N <= 2; ++N) {
      CAPTURE(which);
      CAPTURE(N);
      CHECK(verify_lemma(which, N, Mode::symbolic, 1, 0).equal());
      CHECK(degree_bound_check(which, N));
    }
}

TEST_CASE("lemma point evaluation matches the expansion") {
  std::mt19937_64 rng(4);
  for (int which = 1; which <= 3; ++which) {
    const int N = 1;
    const auto pt = random_point(rng, lemma_ground(which, N), false);
    for (auto side : {Side::lhs, Side::rhs})
      CHECK(lemma_side_at(which, side, N, pt) == eval_rational(lemma_side(which, side, N), std::span<const Rational>(pt)));
  }
}

TEST_CASE("lemma sides are symmetric and flip together under inversion") {
  for (int which = 1; which <= 3; ++which) {
    const int N = 1;
    const std::size_t k = lemma_ground(which, N);
    auto inv = Substitution::identity(k);
    inv.images[0] = VariableImage::var(0, -1);
    const auto lhs = lemma_side(which, Side::lhs, N), rhs = lemma_side(which, Side::rhs, N);
    CHECK(substitute(lhs, swap12(k)) == lhs);
    CHECK(substitute(rhs, swap12(k)) == rhs);
    const auto lhs_inv = substitute(lhs, inv), rhs_inv = substitute(rhs, inv);
    const bool plus = lhs_inv == lhs;
    CHECK((plus || lhs_inv == -lhs));
    CHECK(rhs_inv == (plus ? rhs : -rhs));
  }
}

TEST_CASE("the third lemma vanishes at x_1 = 1 and x_1 = -1") {
  for (int N = 0; N <= 1; ++N) {
    const std::size_t k = lemma_ground(3, N);
    for (int v : {1, -1}) {
      auto s = Substitution::identity(k);
      s.images[0] = VariableImage::constant(v);
      CHECK(substitute(lemma_side(3, Side::lhs, N), s).is_zero());
      CHECK(substitute(lemma_side(3, Side::rhs, N), s).is_zero());
    }
  }
}

TEST_CASE("randomized verification is reproducible") {
  const auto a = verify_lemma(2, 3, Mode::randomized, 5, 42);
  const auto b = verify_lemma(2, 3, Mode::randomized, 5, 42);
  CHECK(a.equal());
  CHECK(a.trials == 5);
  std::mt19937_64 r1(9), r2(9);
  CHECK(random_point(r1, 4, false) == random_point(r2, 4, false));
  CHECK(b.seed == 42);
}

TEST_CASE("random points avoid the singular loci") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pt = random_point(rng, 6, trial % 2 == 0);
    for (std::size_t i = 0; i < pt.size(); ++i) {
      CHECK(pt[i] != 0);
      CHECK(pt[i] != 1);
      CHECK(pt[i] != -1);
      for (std::size_t j = i + 1; j < pt.size(); ++j) {
        CHECK(pt[i] != pt[j]);
        CHECK(pt[i] * pt[j] != 1);
      }
    }
  }
}

TEST_CASE("a false identity yields a counterexample") {
  IdentityInstance inst;
  inst.identity = "false";
  inst.nvars = 2;
  inst.lhs_poly = [] { return x(2, 0) + x(2, 1); };
  inst.rhs_poly = [] { return x(2, 0) + x(2, 1) + c(2, 1); };
  inst.lhs_at = [](std::span<const Rational> p) -> Rational { return p[0] + p[1]; };
  inst.rhs_at = [](std::span<const Rational> p) -> Rational { return p[0] + p[1] + 1; };
  const auto sym = verify_instance(inst, Mode::symbolic, 1, 3);
  REQUIRE(!sym.equal());
  CHECK(sym.counterexample->point.size() == 2);
  CHECK(sym.counterexample->lhs != sym.counterexample->rhs);
  const auto rnd = verify_instance(inst, Mode::randomized, 4, 3);
  REQUIRE(!rnd.equal());
  const auto& pt = rnd.counterexample->point;
  CHECK(rnd.counterexample->lhs == to_string(pt[0] + pt[1]));
}

TEST_CASE("first theorem at m = 1, n = 1") {
  const auto inst = theorem_instance(Theorem::thm1, 1, 1);
  const auto expected = x(1, 0, 2) + c(1, 1) + x(1, 0, -2);
  CHECK(inst.lhs_poly() == expected);
  CHECK(inst.rhs_poly() == expected);
}

TEST_CASE("third theorem at m = 0, n = 1") {
  const auto inst = theorem_instance(Theorem::thm3, 0, 1);
  const auto expected = x(1, 0) + c(1, 1) + x(1, 0, -1);
  CHECK(inst.lhs_poly() == expected);
  CHECK(inst.rhs_poly() == expected);
}

TEST_CASE("theorems hold symbolically and agree with randomized mode") {
  for (auto t : {Theorem::thm1, Theorem::thm2, Theorem::thm3, Theorem::thm4})
    for (int m = 0; m <= 1; ++m)
      for (int n = 1; n <= 2; ++n) {
        CAPTURE(to_string(t));
        CAPTURE(m);
        CAPTURE(n);
        CHECK(verify_theorem(t, m, n, Mode::symbolic, 1, 0).equal());
        CHECK(verify_theorem(t, m, n, Mode::randomized, 3, 11).equal());
      }
  for (auto t : {Theorem::uniform15, Theorem::uniform65})
    for (int M = 0; M <= 3; ++M) {
      CHECK(verify_theorem(t, M, 2, Mode::symbolic, 1, 0).equal());
      CHECK(verify_theorem(t, M, 2, Mode::randomized, 3, 5).equal());
    }
}

TEST_CASE("the m = 0 boundary of the fourth theorem is routed and noted") {
  const auto r = verify_theorem(Theorem::thm4, 0, 2, Mode::symbolic, 1, 0);
  CHECK(r.equal());
  REQUIRE(r.note.has_value());
  CHECK(r.identity == "thm4");
}

TEST_CASE("bridge identities") {
  for (auto b : {Bridge::eq13, Bridge::eq14})
    for (auto shape : {"0", "2", "1,0", "2,1", "1,1,0"}) {
      CAPTURE(shape);
      CHECK(verify_bridge(b, Shape::parse(shape), Mode::symbolic, 1, 0).equal());
      CHECK(verify_bridge(b, Shape::parse(shape), Mode::randomized, 3, 2).equal());
    }
}

TEST_CASE("name parsing") {
  CHECK(parse_theorem("uniform65") == Theorem::uniform65);
  CHECK(parse_mode("random") == Mode::randomized);
  CHECK(parse_bridge("eq14") == Bridge::eq14);
  CHECK_THROWS(parse_theorem("thm5"));
  CHECK_THROWS(parse_mode("fast"));
}
