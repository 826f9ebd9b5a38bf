#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace morrey {

/// Sum in a fixed pairwise tree order. The result depends only on the order
/// of the terms, never on how callers are scheduled, so it is the one
/// summation primitive every quadrature in the library goes through.
double pairwise_sum(std::span<const double> terms);

/// Run body(0..n-1), optionally on up to `threads` workers. Each index is
/// processed exactly once and bodies must write only to their own slot, so
/// results are identical for every thread count. Exceptions are rethrown
/// on the calling thread.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

/// Clamp a requested worker count: <=0 means hardware concurrency.
int resolve_threads(int requested);

}  // namespace morrey
