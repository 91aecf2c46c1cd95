#pragma once

#include <functional>

namespace hdx {

/** Worker count honoring the HDX_THREADS environment variable
 *  (unset or 0 means one worker per hardware thread). */
int thread_budget();

/**
 * Runs fn(i) for i in [0, count). Iterations may execute on several
 * threads; callers keep determinism by writing only to slot i of
 * preallocated storage and reducing sequentially afterwards.
 */
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace hdx
