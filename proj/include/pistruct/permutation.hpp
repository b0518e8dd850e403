#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pistruct {

/// 0-based point index. Points are printed and parsed 1-based.
using Point = std::uint32_t;

/// A bijection of {0..degree-1} stored as an image table.
///
/// Products are read left to right: `(a * b)(i) == b(a(i))`, so `a * b`
/// applies `a` first. Conjugation follows the same right-action convention,
/// `x^g = g^-1 * x * g`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image table; throws InvalidArgument if it is not a
  /// bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds a permutation from 0-based cycles. Cycles must be disjoint.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Order of the element (lcm of the cycle lengths).
  std::uint64_t order() const;
  Permutation pow(std::int64_t e) const;

  /// Smallest point moved, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Disjoint cycles of length >= 2, each starting at its smallest point,
  /// ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// `x^g = g^-1 x g`.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// `[a, b] = a^-1 b^-1 a b`.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Parses cycle notation: element := "()" | cycle+ ; cycle := "(" int ("," int)+ ")".
/// Integers are 1-based and bounded by `degree`; no whitespace is allowed.
/// Throws ParseError carrying the offending character offset.
Permutation parse_permutation(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace pistruct

template <>
struct std::hash<pistruct::Permutation> : pistruct::PermutationHash {};
