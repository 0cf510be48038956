#include <cstdlib>
#include <string_view>

#include "loopcomm/error.hpp"
#include "loopcomm/kernels.hpp"

namespace loopcomm::kernels {

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(LOOPCOMM_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_available(isa))
    throw Error(ErrorKind::Malformed, "kernel set not available on this CPU: " +
                                          std::string(isa_name(isa)));
#if defined(LOOPCOMM_HAVE_AVX2)
  if (isa == Isa::Avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("LOOPCOMM_ISA"); env && std::string_view(env) == "scalar")
    return detail::scalar_table;
#if defined(LOOPCOMM_HAVE_AVX2)
  if (isa_available(Isa::Avx2)) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& chosen = select();
  return chosen;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

}  // namespace loopcomm::kernels
