#include "gkmchar/parallel.hpp"

#include <atomic>

namespace gkmchar {

namespace {
std::atomic<ExecMode> g_default_mode{
#ifdef _OPENMP
    ExecMode::openmp
#else
    ExecMode::serial
#endif
};
}  // namespace

ExecMode default_exec_mode() { return g_default_mode.load(); }
void set_default_exec_mode(ExecMode m) { g_default_mode.store(m); }

bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace gkmchar
