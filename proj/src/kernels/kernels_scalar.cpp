#include "loopcomm/kernels.hpp"

namespace loopcomm::kernels::detail {
namespace {

void compose_scalar(const Point* outer, const Point* inner, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = outer[inner[i]];
}

bool is_identity_scalar(const Point* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

bool maps_into_scalar(const Point* p, const std::uint32_t* member, const Point* set,
                      std::size_t set_size) {
  for (std::size_t i = 0; i < set_size; ++i)
    if (member[p[set[i]]] == 0) return false;
  return true;
}

}  // namespace

const KernelTable scalar_table{Isa::Scalar, compose_scalar, is_identity_scalar,
                               maps_into_scalar};

}  // namespace loopcomm::kernels::detail
