#include "charlab/combinat.hpp"

#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>

using namespace charlab;

namespace {

// Independent oracle: enumerate every array in [0, a]^(b*c) and filter.
long naive_count(int a, int b, int c, Symmetry sym) {
  const int cells = b * c;
  std::vector<int> pi(static_cast<std::size_t>(cells), 0);
  long total = 0;
  while (true) {
    bool ok = true;
    for (int i = 0; i < b && ok; ++i)
      for (int j = 0; j < c && ok; ++j) {
        const int v = pi[static_cast<std::size_t>(i * c + j)];
        if (i > 0 && pi[static_cast<std::size_t>((i - 1) * c + j)] < v) ok = false;
        if (j > 0 && pi[static_cast<std::size_t>(i * c + j - 1)] < v) ok = false;
        if (sym == Symmetry::symmetric && pi[static_cast<std::size_t>(j * c + i)] != v) ok = false;
        if (sym == Symmetry::transpose_complementary && v + pi[static_cast<std::size_t>((b - 1 - j) * c + (b - 1 - i))] != a) ok = false;
      }
    if (ok) ++total;
    int k = 0;
    while (k < cells && pi[static_cast<std::size_t>(k)] == a) pi[static_cast<std::size_t>(k++)] = 0;
    if (k == cells) break;
    ++pi[static_cast<std::size_t>(k)];
  }
  return total;
}

}  // namespace

TEST_CASE("small plane partition counts") {
  CHECK(count_pp(1, 1, 1) == 2);
  CHECK(count_pp(2, 2, 2) == 20);
  CHECK(count_pp(3, 0, 4) == 1);
  CHECK(count_pp(0, 3, 3) == 1);
  CHECK(count_spp(1, 1) == 2);
  CHECK(count_spp(2, 2) == 10);
  CHECK(count_tcpp(0, 3) == 1);
  CHECK(count_tcpp(1, 2) == 2);
  CHECK(pp_product(6, 3, 3) == 41580);
}

TEST_CASE("enumeration matches the naive filter") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(count_pp(a, b, c) == naive_count(a, b, c, Symmetry::none));
        if (b == c) {
          CHECK(count_spp(a, b) == naive_count(a, b, b, Symmetry::symmetric));
          if (a % 2 == 0) CHECK(count_tcpp(a / 2, b) == naive_count(a, b, b, Symmetry::transpose_complementary));
        }
      }
}

TEST_CASE("enumerated partitions satisfy their class predicates") {
  long seen = 0;
  enumerate_pp(4, 3, 3, Symmetry::transpose_complementary, [&](const PlanePartition& p) {
    CHECK(p.is_transpose_complementary());
    ++seen;
    return true;
  });
  CHECK(seen == count_tcpp(2, 3));
  enumerate_pp(3, 3, 3, Symmetry::symmetric, [&](const PlanePartition& p) {
    CHECK(p.is_symmetric());
    return true;
  });
  CHECK_THROWS(PlanePartition(2, 1, 2, {1, 2}));
  CHECK_THROWS(PlanePartition(2, 1, 1, {3}));
}

TEST_CASE("counts are invariant under permuting the box") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    std::array<int, 3> d{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
    const Integer base = count_pp(d[0], d[1], d[2]);
    std::sort(d.begin(), d.end());
    do CHECK(count_pp(d[0], d[1], d[2]) == base);
    while (std::next_permutation(d.begin(), d.end()));
  }
}

TEST_CASE("symmetry classes are subsets") {
  for (int a = 0; a <= 4; ++a)
    for (int n = 1; n <= 3; ++n) {
      CHECK(count_spp(a, n) <= count_pp(a, n, n));
      if (a % 2 == 0) CHECK(count_tcpp(a / 2, n) <= count_pp(a, n, n));
    }
}

TEST_CASE("nth partition follows the enumeration order") {
  CHECK(nth_pp(2, 2, 2, 0)->entries() == std::vector<int>{0, 0, 0, 0});
  CHECK(nth_pp(2, 2, 2, 19)->entries() == std::vector<int>{2, 2, 2, 2});
  CHECK(!nth_pp(2, 2, 2, 20).has_value());
  std::uint64_t k = 0;
  enumerate_pp(2, 2, 3, Symmetry::none, [&](const PlanePartition& p) {
    CHECK(nth_pp(2, 2, 3, k++)->entries() == p.entries());
    return true;
  });
}

TEST_CASE("characters and products agree with enumeration") {
  for (int a = 0; a <= 4; ++a)
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(a);
      CAPTURE(n);
      CHECK(pp_character(a, n, n) == count_pp(a, n, n));
      CHECK(pp_product(a, n, n + 1) == count_pp(a, n, n + 1));
      CHECK(spp_character(a, n) == count_spp(a, n));
      CHECK(spp_product(a, n) == count_spp(a, n));
      if (a % 2 == 0) CHECK(tcpp_character(a / 2, n) == count_tcpp(a / 2, n));
    }
}

TEST_CASE("SPP* algebraic characterizations") {
  CHECK(count_spp_star_algebraic(0, 1) == 2);
  CHECK(count_spp_star_algebraic(1, 2) == 6);
  for (int m = 0; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(count_spp_star_algebraic(m, n));
}

TEST_CASE("count reports") {
  const auto r = count(CountFamily::pp, 2, 2, 2, applicable_methods(CountFamily::pp));
  CHECK(r.consistent());
  CHECK(r.value() == Integer(20));
  CHECK(r.methods.size() == 3);
  CHECK_THROWS_AS(count(CountFamily::spp_star, 2, 2, 2, {CountMethod::bruteforce}), std::invalid_argument);
  CHECK_THROWS_AS(count(CountFamily::tcpp, 3, 2, 2, {CountMethod::product}), std::invalid_argument);
  const auto big = count(CountFamily::pp, 9, 4, 4, {CountMethod::bruteforce, CountMethod::product});
  CHECK(!big.methods.at(CountMethod::bruteforce).has_value());
  CHECK(big.value() == pp_product(9, 4, 4));
  CHECK(parse_count_family("spp-star") == CountFamily::spp_star);
  CHECK(to_string(CountMethod::character) == "character");
  CHECK_THROWS(parse_count_method("guess"));
}

TEST_CASE("count identities") {
  for (auto which : {"even", "odd", "odd-pair", "even-pair"})
    for (int m = 0; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n) {
        CAPTURE(which);
        CAPTURE(m);
        CAPTURE(n);
        const auto r = verify_count_identity(which, m, n);
        CHECK(r.consistent());
      }
  const auto r = verify_count_identity("even-pair", 0, 1);
  CHECK(r.lhs == Integer(2));
  CHECK_THROWS(verify_count_identity("7.1", 1, 1));
}
