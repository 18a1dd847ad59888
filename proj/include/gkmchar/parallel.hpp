#pragma once

#include <cstddef>

namespace gkmchar {

// Execution mode for the data-parallel kernels.  Every parallel kernel
// has a serial twin with identical output; since all arithmetic is
// exact, the reduction order cannot change any result.
enum class ExecMode { serial, openmp };

// Process-wide default used when callers do not pass a mode explicitly.
ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode m);
bool openmp_available();

namespace par {

// Runs body(i) for i in [0, n).  Bodies must only write state owned by
// iteration i.
template <class Body>
void for_each_index(std::size_t n, ExecMode mode, const Body& body) {
    if (mode == ExecMode::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            body(static_cast<std::size_t>(i));
        }
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace par
}  // namespace gkmchar
