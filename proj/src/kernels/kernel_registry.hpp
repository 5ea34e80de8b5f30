#pragma once

#include "prelie/kernels.hpp"

namespace prelie::kernels {

#if defined(PRELIE_HAVE_AVX2)
const KernelSet& avx2_kernel_set();
#endif

} // namespace prelie::kernels
