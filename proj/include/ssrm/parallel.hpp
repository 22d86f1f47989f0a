#pragma once

#include <cstddef>
#include <functional>

namespace ssrm {

/// Splits [0, n) into consecutive chunks of `chunk` items and runs
/// fn(begin, end, chunk_index) for each, on up to `threads` workers. Chunk
/// boundaries depend only on n and chunk, never on the worker count.
/// The first exception thrown by any chunk (lowest chunk index) is rethrown.
void parallel_chunks(std::size_t n, std::size_t chunk, int threads,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

inline std::size_t chunk_count(std::size_t n, std::size_t chunk) { return (n + chunk - 1) / chunk; }

}  // namespace ssrm
