#pragma once

// Data-parallel inner loops over permutation image arrays.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is picked once at first use from the CPU feature bits;
// setting LOOPCOMM_ISA=scalar in the environment forces the reference path.
// Both variants are exposed so tests can check them against each other.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace loopcomm::kernels {

using Point = std::uint32_t;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  // out[i] = outer[inner[i]]
  void (*compose)(const Point* outer, const Point* inner, Point* out, std::size_t n);
  // p[i] == i for all i
  bool (*is_identity)(const Point* p, std::size_t n);
  // member[p[s]] != 0 for every s in set
  bool (*maps_into)(const Point* p, const std::uint32_t* member, const Point* set,
                    std::size_t set_size);
};

bool isa_available(Isa isa) noexcept;
const KernelTable& table_for(Isa isa);
const KernelTable& active() noexcept;
std::string_view isa_name(Isa isa) noexcept;

inline void compose(std::span<const Point> outer, std::span<const Point> inner,
                    std::span<Point> out) {
  active().compose(outer.data(), inner.data(), out.data(), inner.size());
}

inline bool is_identity(std::span<const Point> p) {
  return active().is_identity(p.data(), p.size());
}

inline bool maps_into(std::span<const Point> p, std::span<const std::uint32_t> member,
                      std::span<const Point> set) {
  return active().maps_into(p.data(), member.data(), set.data(), set.size());
}

namespace detail {
extern const KernelTable scalar_table;
#if defined(LOOPCOMM_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace loopcomm::kernels
