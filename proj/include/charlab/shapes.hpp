#pragma once

// Highest weights (non-increasing sequences of integers or half-integers), skew
// diagrams and the column statistics used by the even orthogonal decompositions.

#include "charlab/laurent.hpp"

#include <compare>
#include <cstddef>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace charlab {

/// Non-increasing sequence of half-integers of fixed length N. All parts share one
/// parity (all integral or all strictly half-integral) and only the last part may be
/// negative. Trailing zeros are significant: the length is the variable count.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<HalfExp> parts);

  /// "2,2,0", "3/2,3/2", "" (empty shape).
  static Shape parse(std::string_view text);
  /// Integer parts convenience constructor.
  static Shape of(std::initializer_list<int> parts);

  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  HalfExp operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<HalfExp>& parts() const { return parts_; }

  bool is_integral() const;
  /// Integral with all parts non-negative.
  bool is_partition() const;
  /// Sum of the parts.
  HalfExp weight() const;

  /// Appends zero parts up to length n (integral shapes only).
  Shape padded(std::size_t n) const;
  /// Drops trailing zero parts.
  Shape trimmed() const;
  /// Adds 1/2 to every part.
  Shape plus_half() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<HalfExp> parts_;
};

std::string to_string(const Shape& s);

/// (M^n): n parts all equal to M >= 0.
Shape rectangle(HalfExp M, std::size_t n);

/// Transposed Young diagram; its length is the first part of s.
Shape conjugate(const Shape& s);

/// outer / inner with integral non-negative shapes, padded to a common length.
class SkewDiagram {
 public:
  SkewDiagram(const Shape& outer, const Shape& inner);

  const Shape& outer() const { return outer_; }
  const Shape& inner() const { return inner_; }
  /// Number of cells.
  std::size_t size() const;
  /// Cell count of each column, left to right.
  std::vector<std::size_t> column_heights() const;

 private:
  Shape outer_;
  Shape inner_;
};

/// Number of columns of the skew diagram with an odd number of cells.
std::size_t odd_columns(const SkewDiagram& d);

/// All partitions nu contained in the rectangle (M^n), each padded to length n, in
/// lexicographically descending order. Restartable: every begin() starts over.
class SubshapesOfRectangle {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Shape;
    using difference_type = std::ptrdiff_t;
    using pointer = const Shape*;
    using reference = const Shape&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

   private:
    friend class SubshapesOfRectangle;
    explicit iterator(Shape start) : current_(std::move(start)), done_(false) {}
    Shape current_;
    bool done_ = true;
  };

  SubshapesOfRectangle(int M, std::size_t n);
  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  int M_;
  std::size_t n_;
};

inline SubshapesOfRectangle subshapes_of_rectangle(int M, std::size_t n) { return SubshapesOfRectangle(M, n); }

}  // namespace charlab
