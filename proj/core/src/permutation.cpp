#include "ctlab/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ctlab/errors.hpp"

namespace ctlab {

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw input_error("image table is not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  Permutation p;
  p.img_ = std::move(img);
  return p;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    out.img_[x] = img_[rhs.img_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x)
    out.img_[img_[x]] = static_cast<std::uint8_t>(x);
  return out;
}

Permutation Permutation::power(std::int64_t n) const {
  if (n < 0)
    return inverse().power(-n);
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (n > 0) {
    if (n & 1)
      acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::int64_t Permutation::order() const {
  std::int64_t ord = 1;
  for (int len : cycle_type())
    ord = std::lcm(ord, static_cast<std::int64_t>(len));
  return ord;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x)
      return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x])
      continue;
    int len = 0;
    std::size_t y = x;
    do {
      seen[y] = true;
      y = img_[y];
      ++len;
    } while (y != x);
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) {
      seen[x] = true;
      continue;
    }
    out += '(';
    std::size_t y = x;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(y + 1);
      seen[y] = true;
      y = img_[y];
      first = false;
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Permutation::from_cycles(const std::string &text, int degree) {
  if (degree < 1 || degree > 255)
    throw input_error("permutation degree must be in [1, 255]");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_spaces = [&] {
    while (i < text.size() && text[i] == ' ')
      ++i;
  };
  skip_spaces();
  if (i == text.size())
    throw input_error("empty cycle expression");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw input_error("expected '(' at position " + std::to_string(i + 1) +
                        " of cycle expression '" + text + "'");
    ++i;
    std::vector<int> points;
    skip_spaces();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw input_error("expected point number at position " + std::to_string(i + 1) +
                          " of cycle expression '" + text + "'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 255)
          throw input_error("point " + std::to_string(v) + " out of range in '" + text + "'");
        ++i;
      }
      if (v < 1 || v > degree)
        throw input_error("point " + std::to_string(v) + " outside degree " +
                          std::to_string(degree) + " in '" + text + "'");
      if (used[static_cast<std::size_t>(v - 1)])
        throw input_error("point " + std::to_string(v) + " repeated in '" + text + "'");
      used[static_cast<std::size_t>(v - 1)] = true;
      points.push_back(v - 1);
      skip_spaces();
    }
    if (i == text.size())
      throw input_error("unterminated cycle in '" + text + "'");
    ++i; // ')'
    for (std::size_t j = 0; j < points.size(); ++j)
      img[static_cast<std::size_t>(points[j])] =
          static_cast<std::uint8_t>(points[(j + 1) % points.size()]);
    any_cycle = true;
    skip_spaces();
  }
  if (!any_cycle)
    throw input_error("empty cycle expression");
  return Permutation(std::move(img));
}

} // namespace ctlab
