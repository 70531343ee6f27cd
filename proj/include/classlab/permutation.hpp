#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace classlab {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products compose right to left: (p * q)(x) == p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Throws PreconditionError unless images is a bijection.
  explicit Permutation(std::vector<Point> images);
  /// Unchecked construction from images known to be a bijection.
  static Permutation from_images_unchecked(std::span<const Point> images);
  /// Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  bool is_even() const;
  /// Smallest moved point, or degree() when the identity.
  Point first_moved() const noexcept;
  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle notation with 1-based points; the identity prints as "()".
  std::string to_cycle_string() const;

  /// Appends the points `shift .. shift+degree()-1` image-for-image into a
  /// wider permutation; points outside the block are left untouched.
  Permutation embedded(std::size_t total_degree, std::size_t shift) const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// g p g^-1
Permutation conjugate(const Permutation& p, const Permutation& g);
/// a b a^-1 b^-1
Permutation commutator(const Permutation& a, const Permutation& b);

/// Parses cycle notation `(1 2 3)(4 5)` with 1-based points into a permutation
/// of the given degree. Whitespace is ignored; `()` is the identity. Throws
/// ParseError on malformed text, repeated points, or points beyond degree.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Largest point mentioned in cycle text (1-based), 0 for the identity.
std::size_t max_point_in_cycles(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace classlab
