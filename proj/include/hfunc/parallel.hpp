#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfunc {

// Execution policy for the sweep kernels. Both paths compute identical
// results: parallelism is only ever across independent output slots, and
// every reduction is an ordered serial loop. The serial path is the
// reference implementation the tests compare against.
enum class exec_policy { serial, parallel };

template <typename F>
void parallel_for(exec_policy policy, std::int64_t n, F&& body) {
#ifdef _OPENMP
    if (policy == exec_policy::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#else
    (void)policy;
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

inline const char* exec_name(exec_policy p) {
    return p == exec_policy::serial ? "serial" : "parallel";
}

} // namespace hfunc
