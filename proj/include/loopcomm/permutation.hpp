#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopcomm/kernels.hpp"

namespace loopcomm {

using Point = kernels::Point;

// A bijection of {0, ..., degree-1}, stored as its image list.
//
// Composition follows function notation: (p * q)(x) = p(q(x)), so q acts
// first. This matches how the translation words are written, e.g.
// T_x = R_x^{-1} L_x is `inverse(R(x)) * L(x)`.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(Malformed) unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  // Caller guarantees `images` is a bijection.
  static Permutation from_images_unchecked(std::vector<Point> images);
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  // Space-separated image list, degree implied by length.
  static Permutation parse(std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept { return kernels::is_identity(images_); }
  Permutation inverse() const;
  std::vector<Point> moved_points() const;

  friend Permutation operator*(const Permutation& outer, const Permutation& inner);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const;

 private:
  std::vector<Point> images_;
};

// g h g^-1 h^-1
Permutation commutator(const Permutation& g, const Permutation& h);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace loopcomm
