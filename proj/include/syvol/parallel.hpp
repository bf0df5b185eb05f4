#pragma once

#include <cstddef>
#include <functional>

namespace syvol {

/// Worker count: SYVOL_THREADS if set and positive, else hardware concurrency.
int thread_count();

/// Run body(i) for i in [0, count), split across thread_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace syvol
