#pragma once

#include <functional>

namespace hilbert {

/// Execution policy for the data-parallel kernels. Every parallel kernel
/// writes to per-index slots (or per-batch accumulators merged in index
/// order), so serial and parallel runs produce bit-identical results; the
/// serial path is the reference implementation used by the tests and the
/// benchmark.
enum class Exec { serial, parallel };

/// Number of worker threads the parallel policy would use.
int worker_count();

/// Run fn(i) for all i in [0, count). Iterations must be independent and
/// write only to their own slots.
void for_each_index(Exec exec, int count, const std::function<void(int)>& fn);

}  // namespace hilbert
