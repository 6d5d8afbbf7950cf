#ifndef CTLAB_PERMUTATION_HPP
#define CTLAB_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ctlab {

// A permutation of {0, ..., degree-1}, stored as its image table.
// Composition is right-to-left: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator()(std::uint8_t point) const { return img_[point]; }

  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  Permutation power(std::int64_t n) const;
  std::int64_t order() const;
  bool is_identity() const;

  // Cycle lengths in decreasing order, fixed points included as 1s.
  std::vector<int> cycle_type() const;

  // Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for the
  // identity. Fixed points are omitted.
  std::string to_cycles() const;

  // Parses one generator in cycle notation: a sequence of parenthesized
  // cycles of 1-based points, or "()" for the identity. Throws input_error on
  // malformed text, out-of-range points, or repeated points.
  static Permutation from_cycles(const std::string &text, int degree);

  bool operator==(const Permutation &rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation &rhs) const { return img_ != rhs.img_; }
  bool operator<(const Permutation &rhs) const { return img_ < rhs.img_; }

  const std::vector<std::uint8_t> &images() const { return img_; }

private:
  std::vector<std::uint8_t> img_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const {
    // FNV-1a over the image bytes
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace ctlab

#endif
