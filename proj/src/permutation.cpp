#include "loopcomm/permutation.hpp"

#include <sstream>

#include "loopcomm/error.hpp"

namespace loopcomm {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::Malformed, "image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Point> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> images = identity(degree).images_;
  for (const auto& cycle : cycles) {
    if (cycle.size() < 2) continue;
    const Point* c = cycle.begin();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (c[i] >= degree) throw Error(ErrorKind::Malformed, "cycle point out of range");
      images[c[i]] = c[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Point> images;
  long long v = 0;
  while (in >> v) {
    if (v < 0) throw Error(ErrorKind::Malformed, "negative point in permutation");
    images.push_back(static_cast<Point>(v));
  }
  if (!in.eof()) throw Error(ErrorKind::Malformed, "bad token in permutation");
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  return from_images_unchecked(std::move(inv));
}

std::vector<Point> Permutation::moved_points() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) moved.push_back(static_cast<Point>(i));
  return moved;
}

Permutation operator*(const Permutation& outer, const Permutation& inner) {
  std::vector<Point> out(inner.degree());
  kernels::compose(outer.images_, inner.images_, out);
  return Permutation::from_images_unchecked(std::move(out));
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s;
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return g * h * g.inverse() * h.inverse();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace loopcomm
