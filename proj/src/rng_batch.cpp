// Element-wise batch kernels, kept in their own translation unit so the build
// can attach aggressive vectorization flags without touching the sequential
// accumulation logic elsewhere.

#include <cmath>
#include <cstddef>

namespace ruinlab::detail {

void exp_batch(const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}

}  // namespace ruinlab::detail
