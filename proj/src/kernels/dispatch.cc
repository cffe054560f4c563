#include <stdexcept>
#include <string>

#include "transit_arb/swap_kernel.h"

namespace transit_arb {

std::string_view to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kAuto: return "auto";
    case KernelKind::kScalar: return "scalar";
    case KernelKind::kAvx2: return "avx2";
    case KernelKind::kNeon: return "neon";
  }
  return "auto";
}

std::optional<KernelKind> parse_kernel_kind(std::string_view text) {
  for (auto k : {KernelKind::kAuto, KernelKind::kScalar, KernelKind::kAvx2,
                 KernelKind::kNeon}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

bool kernel_available(KernelKind kind) {
  switch (kind) {
    case KernelKind::kAuto:
    case KernelKind::kScalar:
      return true;
    case KernelKind::kAvx2:
#if defined(TRANSIT_ARB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case KernelKind::kNeon:
#if defined(TRANSIT_ARB_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

std::vector<KernelKind> available_kernels() {
  std::vector<KernelKind> out;
  for (auto k : {KernelKind::kScalar, KernelKind::kAvx2, KernelKind::kNeon}) {
    if (kernel_available(k)) out.push_back(k);
  }
  return out;
}

KernelKind resolve_kernel(KernelKind kind) {
  if (kind != KernelKind::kAuto) return kind;
  if (kernel_available(KernelKind::kAvx2)) return KernelKind::kAvx2;
  if (kernel_available(KernelKind::kNeon)) return KernelKind::kNeon;
  return KernelKind::kScalar;
}

SwapRowKernel swap_row_kernel(KernelKind kind) {
  kind = resolve_kernel(kind);
  if (!kernel_available(kind)) {
    throw std::invalid_argument("swap kernel '" + std::string{to_string(kind)} +
                                "' is not available on this machine");
  }
  switch (kind) {
#if defined(TRANSIT_ARB_HAVE_AVX2)
    case KernelKind::kAvx2: return &kernels::swap_row_avx2;
#endif
#if defined(TRANSIT_ARB_HAVE_NEON)
    case KernelKind::kNeon: return &kernels::swap_row_neon;
#endif
    default: return &kernels::swap_row_scalar;
  }
}

}  // namespace transit_arb
