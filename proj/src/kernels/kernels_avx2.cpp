#include "loopcomm/kernels.hpp"

#include <immintrin.h>

// Compiled with -mavx2; only reached after the dispatcher confirmed support.

namespace loopcomm::kernels::detail {
namespace {

void compose_avx2(const Point* outer, const Point* inner, Point* out, std::size_t n) {
  const auto* base = reinterpret_cast<const int*>(outer);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i idx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + i));
    __m256i img = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), img);
  }
  for (; i < n; ++i) out[i] = outer[inner[i]];
}

bool is_identity_avx2(const Point* p, std::size_t n) {
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i step = _mm256_set1_epi32(8);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    __m256i eq = _mm256_cmpeq_epi32(v, iota);
    if (_mm256_movemask_epi8(eq) != -1) return false;
    iota = _mm256_add_epi32(iota, step);
  }
  for (; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

bool maps_into_avx2(const Point* p, const std::uint32_t* member, const Point* set,
                    std::size_t set_size) {
  const auto* pbase = reinterpret_cast<const int*>(p);
  const auto* mbase = reinterpret_cast<const int*>(member);
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= set_size; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(set + i));
    __m256i img = _mm256_i32gather_epi32(pbase, s, 4);
    __m256i flag = _mm256_i32gather_epi32(mbase, img, 4);
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi32(flag, zero)) != 0) return false;
  }
  for (; i < set_size; ++i)
    if (member[p[set[i]]] == 0) return false;
  return true;
}

}  // namespace

const KernelTable avx2_table{Isa::Avx2, compose_avx2, is_identity_avx2, maps_into_avx2};

}  // namespace loopcomm::kernels::detail
