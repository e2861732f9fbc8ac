// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_PARALLEL_HPP
#define THERMOSEMI_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace thermosemi
{

// Worker count: THERMOSEMI_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Calls body(i) for i in [0, count) on up to worker_count() threads. Each index is visited
// exactly once; the first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace thermosemi

#endif  // THERMOSEMI_PARALLEL_HPP
