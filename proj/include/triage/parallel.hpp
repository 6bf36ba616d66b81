// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 triage-reduce contributors

#pragma once

#include <cstddef>
#include <functional>

namespace triage {

// Worker-thread cap. Initialized from TRIAGE_REDUCE_THREADS when set,
// otherwise from std::thread::hardware_concurrency().
int thread_cap();

// Overrides the cap for this process; n < 1 restores the environment default.
void set_thread_cap(int n);

// Calls fn(i) for every i in [0, n). Work is split into contiguous chunks
// whose boundaries depend only on n and the thread cap, so any output written
// to disjoint per-index slots is identical across schedules and thread counts.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace triage
