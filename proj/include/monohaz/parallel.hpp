#pragma once

#include <cstddef>
#include <functional>

namespace monohaz {

//! Resolves a worker count: explicit request > MONOHAZ_THREADS > hardware.
int resolve_threads(int requested = 0);

//! Runs body(i) for i in [0, count) on up to `threads` workers. Work items
//! must be independent and write only to their own slots; under that
//! contract the result is identical for any thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace monohaz
