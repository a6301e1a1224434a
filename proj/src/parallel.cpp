#include "drfwl/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace drfwl {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
#endif
}

ExecPolicy ExecPolicy::hardware() { return {hardware_threads()}; }

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DRFWL_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
      // fall through to hardware default
    }
  }
  return hardware_threads();
}

}  // namespace drfwl
