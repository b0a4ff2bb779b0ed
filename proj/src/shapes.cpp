#include "charlab/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace charlab {

Shape::Shape(std::vector<HalfExp> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("shape parts must be non-increasing: " + to_string(*this));
    if (parts_[i].is_integral() != parts_.front().is_integral())
      throw std::invalid_argument("shape mixes integer and half-integer parts: " + to_string(*this));
  }
  if (parts_.size() >= 2 && parts_[parts_.size() - 2].doubled < 0)
    throw std::invalid_argument("only the last part of a shape may be negative: " + to_string(*this));
}

Shape Shape::parse(std::string_view text) {
  std::vector<HalfExp> parts;
  if (text.empty()) return Shape{};
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token.empty()) throw std::invalid_argument("empty part in shape '" + std::string(text) + "'");
    parts.push_back(parse_half_exp(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Shape(std::move(parts));
}

Shape Shape::of(std::initializer_list<int> parts) {
  std::vector<HalfExp> v;
  for (int p : parts) v.push_back(HalfExp::integer(p));
  return Shape(std::move(v));
}

bool Shape::is_integral() const {
  return std::all_of(parts_.begin(), parts_.end(), [](HalfExp e) { return e.is_integral(); });
}

bool Shape::is_partition() const { return is_integral() && (parts_.empty() || parts_.back().doubled >= 0); }

HalfExp Shape::weight() const { return std::accumulate(parts_.begin(), parts_.end(), HalfExp{}); }

Shape Shape::padded(std::size_t n) const {
  if (n < parts_.size()) throw std::invalid_argument("shape " + to_string(*this) + " is longer than " + std::to_string(n));
  std::vector<HalfExp> v = parts_;
  v.resize(n, HalfExp{});
  return Shape(std::move(v));
}

Shape Shape::trimmed() const {
  std::vector<HalfExp> v = parts_;
  while (!v.empty() && v.back().doubled == 0) v.pop_back();
  return Shape(std::move(v));
}

Shape Shape::plus_half() const {
  std::vector<HalfExp> v = parts_;
  for (auto& e : v) e += HalfExp::halves(1);
  return Shape(std::move(v));
}

std::string to_string(const Shape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i > 0) out += ',';
    out += to_string(s[i]);
  }
  return out;
}

Shape rectangle(HalfExp M, std::size_t n) {
  if (M.doubled < 0) throw std::invalid_argument("rectangle side must be non-negative");
  return Shape(std::vector<HalfExp>(n, M));
}

Shape conjugate(const Shape& s) {
  if (!s.is_partition()) throw std::invalid_argument("conjugate needs a partition, got " + to_string(s));
  const int cols = s.empty() ? 0 : s[0].doubled / 2;
  std::vector<HalfExp> v;
  for (int j = 1; j <= cols; ++j) {
    int count = 0;
    for (const auto& p : s.parts())
      if (p.doubled / 2 >= j) ++count;
    v.push_back(HalfExp::integer(count));
  }
  return Shape(std::move(v));
}

SkewDiagram::SkewDiagram(const Shape& outer, const Shape& inner) {
  if (!outer.is_partition() || !inner.is_partition())
    throw std::invalid_argument("skew diagrams need partitions");
  const std::size_t n = std::max(outer.length(), inner.length());
  outer_ = outer.padded(n);
  inner_ = inner.padded(n);
  for (std::size_t i = 0; i < n; ++i)
    if (inner_[i] > outer_[i])
      throw std::invalid_argument("inner shape " + to_string(inner) + " not contained in " + to_string(outer));
}

std::vector<std::size_t> SkewDiagram::column_heights() const {
  const int cols = outer_.empty() ? 0 : outer_[0].doubled / 2;
  std::vector<std::size_t> heights(static_cast<std::size_t>(cols), 0);
  for (std::size_t i = 0; i < outer_.length(); ++i)
    for (int j = inner_[i].doubled / 2; j < outer_[i].doubled / 2; ++j) ++heights[static_cast<std::size_t>(j)];
  return heights;
}

std::size_t SkewDiagram::size() const {
  const auto h = column_heights();
  return std::accumulate(h.begin(), h.end(), std::size_t{0});
}

std::size_t odd_columns(const SkewDiagram& d) {
  const auto h = d.column_heights();
  return static_cast<std::size_t>(std::count_if(h.begin(), h.end(), [](std::size_t c) { return c % 2 == 1; }));
}

SubshapesOfRectangle::SubshapesOfRectangle(int M, std::size_t n) : M_(M), n_(n) {
  if (M < 0) throw std::invalid_argument("rectangle side must be non-negative");
}

SubshapesOfRectangle::iterator SubshapesOfRectangle::begin() const {
  return iterator(rectangle(HalfExp::integer(M_), n_));
}

SubshapesOfRectangle::iterator& SubshapesOfRectangle::iterator::operator++() {
  // Descending lex successor: decrement the rightmost positive part and refill the
  // tail with that new value.
  std::vector<HalfExp> parts = current_.parts();
  std::size_t i = parts.size();
  while (i > 0 && parts[i - 1].doubled == 0) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  parts[i - 1].doubled -= 2;
  for (std::size_t j = i; j < parts.size(); ++j) parts[j] = parts[i - 1];
  current_ = Shape(std::move(parts));
  return *this;
}

}  // namespace charlab
