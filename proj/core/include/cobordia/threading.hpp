#ifndef COBORDIA_THREADING_HPP
#define COBORDIA_THREADING_HPP

#include <cstddef>
#include <functional>

namespace cobordia {

/// Number of worker threads the library may use. Capped by the
/// COBORDIA_THREADS environment variable; defaults to the hardware
/// concurrency, always at least 1.
unsigned thread_budget();

/// Runs fn(begin, end) over chunks of [0, n) on up to thread_budget()
/// threads. Callers are responsible for writing to disjoint state; results
/// must not depend on chunk boundaries.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cobordia

#endif
