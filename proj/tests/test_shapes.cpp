#include "charlab/shapes.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace charlab;

namespace {

Shape random_partition(std::mt19937_64& rng, std::size_t len, int max_part) {
  std::uniform_int_distribution<int> d(0, max_part);
  std::vector<int> v(len);
  for (auto& p : v) p = d(rng);
  std::sort(v.rbegin(), v.rend());
  std::vector<HalfExp> parts;
  for (int p : v) parts.push_back(HalfExp::integer(p));
  return Shape(parts);
}

}  // namespace

TEST_CASE("shape parsing") {
  CHECK(Shape::parse("2,2,0") == Shape::of({2, 2, 0}));
  CHECK(Shape::parse("3/2,1/2").parts() == std::vector<HalfExp>{HalfExp::halves(3), HalfExp::halves(1)});
  CHECK(Shape::parse("").empty());
  CHECK(Shape::parse("2,1,-1") == Shape::of({2, 1, -1}));
  CHECK_THROWS(Shape::parse("1,2"));
  CHECK_THROWS(Shape::parse("1,,1"));
  CHECK_THROWS(Shape::parse("3/2,1"));
  CHECK_THROWS(Shape::parse("2,-1,-1"));
  CHECK(to_string(Shape::parse("3/2,3/2")) == "3/2,3/2");
}

TEST_CASE("shape helpers") {
  const auto s = Shape::of({3, 1, 0});
  CHECK(s.is_partition());
  CHECK(s.weight() == HalfExp::integer(4));
  CHECK(s.trimmed() == Shape::of({3, 1}));
  CHECK(s.trimmed().padded(3) == s);
  CHECK_THROWS(s.padded(2));
  CHECK(s.plus_half() == Shape::parse("7/2,3/2,1/2"));
  CHECK(rectangle(HalfExp::integer(2), 3) == Shape::of({2, 2, 2}));
}

TEST_CASE("conjugate of a known partition") {
  CHECK(conjugate(Shape::of({5, 5, 2, 2})) == Shape::of({4, 4, 2, 2, 2}));
  CHECK(conjugate(Shape::of({0})).empty());
  CHECK_THROWS(conjugate(Shape::parse("1/2")));
}

TEST_CASE("conjugation is an involution and preserves weight") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_partition(rng, 1 + trial % 6, 7).trimmed();
    CHECK(conjugate(conjugate(s)) == s);
    CHECK(conjugate(s).weight() == s.weight());
  }
}

TEST_CASE("skew diagram columns") {
  const SkewDiagram d(Shape::of({2, 2}), Shape::of({1}));
  CHECK(d.column_heights() == std::vector<std::size_t>{1, 2});
  CHECK(d.size() == 3);
  CHECK(odd_columns(d) == 1);
  CHECK_THROWS(SkewDiagram(Shape::of({1}), Shape::of({2})));
}

TEST_CASE("subshapes of a rectangle") {
  std::vector<Shape> all;
  for (const auto& s : subshapes_of_rectangle(2, 2)) all.push_back(s);
  const std::vector<Shape> expected{Shape::of({2, 2}), Shape::of({2, 1}), Shape::of({2, 0}),
                                    Shape::of({1, 1}), Shape::of({1, 0}), Shape::of({0, 0})};
  CHECK(all == expected);
  // Restartable: a second pass yields the same sequence.
  std::vector<Shape> again(subshapes_of_rectangle(2, 2).begin(), subshapes_of_rectangle(2, 2).end());
  CHECK(again == expected);
}

TEST_CASE("subshape count is a binomial coefficient") {
  // Partitions inside an M x n box number C(M + n, n).
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int M = 0; M <= 4; ++M)
    for (std::size_t n = 1; n <= 4; ++n) {
      long count = 0;
      std::set<std::vector<HalfExp>> seen;
      for (const auto& s : subshapes_of_rectangle(M, n)) {
        ++count;
        seen.insert(s.parts());
        CHECK(s.length() == n);
      }
      CHECK(count == binom(M + static_cast<int>(n), static_cast<int>(n)));
      CHECK(seen.size() == static_cast<std::size_t>(count));
    }
}
