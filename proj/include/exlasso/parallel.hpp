#pragma once

#include <functional>

namespace exlasso {

/// Worker count: EXLASSO_THREADS if set, otherwise hardware concurrency.
int worker_count();

/// Runs fn(0), ..., fn(n-1), possibly across threads. Tasks must be
/// independent; each writes its own output slot, so the result does not
/// depend on the thread count.
void parallel_for(int n, const std::function<void(int)>& fn);
void parallel_for(int n, const std::function<void(int)>& fn, int threads);

}  // namespace exlasso
