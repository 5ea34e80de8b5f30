#include <cstdlib>
#include <string_view>

#include "kernel_registry.hpp"

namespace prelie::kernels {

const KernelSet* avx2_kernels() {
#if defined(PRELIE_HAVE_AVX2)
    static const bool cpu_ok = __builtin_cpu_supports("avx2");
    return cpu_ok ? &avx2_kernel_set() : nullptr;
#else
    return nullptr;
#endif
}

std::vector<const KernelSet*> available_kernels() {
    std::vector<const KernelSet*> out{&scalar_kernels()};
    if (const auto* k = avx2_kernels()) {
        out.push_back(k);
    }
    return out;
}

const KernelSet& best_kernels() {
    if (const char* forced = std::getenv("PRELIE_ISA"); forced && std::string_view(forced) == "scalar") {
        return scalar_kernels();
    }
    if (const auto* k = avx2_kernels()) {
        return *k;
    }
    return scalar_kernels();
}

} // namespace prelie::kernels
