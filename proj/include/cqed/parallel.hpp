// Copyright 2026 The cqedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Index-ordered parallel loop. Work items write only to their own slot, so
// results never depend on the thread count or on scheduling.

#pragma once

#include <cstddef>
#include <functional>

namespace cqed {

// CQEDSIM_THREADS if set to a positive integer, else hardware concurrency (>= 1).
int default_thread_count();

// Runs body(i) for i in [0, n) on up to `threads` threads (<= 0: default).
// The first exception thrown by any item is rethrown after all threads join.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace cqed
