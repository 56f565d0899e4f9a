#pragma once

#include "softtop/kernels.hpp"

namespace softtop::kernels::detail {

#if defined(SOFTTOP_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace softtop::kernels::detail
