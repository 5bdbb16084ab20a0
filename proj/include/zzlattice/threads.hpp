#pragma once

#include <functional>

namespace zzlattice {

// Worker cap: min(hardware_concurrency, ZZ_LATTICE_THREADS if set, n_items).
// ZZ_LATTICE_THREADS=1 forces serial execution.
int worker_count(int n_items);

// Index-parallel loop with deterministic result placement (workers pull
// indices from a shared counter; the body writes by index). The first
// exception thrown by any body is rethrown on the caller thread.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace zzlattice
