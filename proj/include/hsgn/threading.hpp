#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsgn {

/** Sets the worker thread count; n <= 0 keeps the runtime default.
 *  Results are independent of the thread count (elementwise kernels only,
 *  no cross-node reductions inside parallel regions). */
inline void set_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0)
        omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int max_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace hsgn
