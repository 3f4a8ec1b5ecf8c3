#include "hilbert/kernels.hpp"

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hilbert {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(Exec exec, int count, const std::function<void(int)>& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    // Exceptions may not unwind out of the worksharing region; capture per
    // index and rethrow the lowest one, matching serial behavior.
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (int i = 0; i < count; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
    return;
  }
#else
  (void)exec;
#endif
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace hilbert
