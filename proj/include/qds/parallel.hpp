// Execution policy for the verification sweeps.  Every parallel kernel has a
// serial twin that is kept as the reference implementation; the two must
// produce bit-identical results (each work item is computed independently and
// written to its own slot, reductions happen serially afterwards).

#ifndef QDS_PARALLEL_HPP
#define QDS_PARALLEL_HPP

#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qds {

enum class Exec { serial, parallel };

// Runs fn(i) for i in [0, count).  Do not change the global precision inside
// fn; set it before calling (see bigfloat.hpp).
inline void for_each_index(long count, Exec exec, const std::function<void(long)>& fn) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
#else
    (void)exec;
#endif
    for (long i = 0; i < count; ++i) fn(i);
}

}  // namespace qds

#endif
