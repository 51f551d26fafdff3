// Copyright 2026 The mlalg Authors
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

// Exhaustive search kernels for universally quantified laws.
//
// Every identity this library verifies has the shape "for all (i, j, k) in
// [0,a) x [0,b) x [0,c): law(i, j, k)". The kernels return the
// lexicographically least triple on which the law fails. The serial version
// is the reference; the OpenMP version partitions on the first index and
// must return exactly the same triple.

#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <vector>

#include "mla/types.hpp"

namespace mla::kernels {

using Extents = std::array<std::size_t, 3>;
using Triple = std::array<std::size_t, 3>;

template <class Law>
std::optional<Triple> first_failure_serial(const Extents& ext, Law&& law) {
  for (std::size_t i = 0; i < ext[0]; ++i)
    for (std::size_t j = 0; j < ext[1]; ++j)
      for (std::size_t k = 0; k < ext[2]; ++k)
        if (!law(i, j, k)) return Triple{i, j, k};
  return std::nullopt;
}

template <class Law>
std::optional<Triple> first_failure_parallel(const Extents& ext, Law&& law) {
  const auto rows = static_cast<long long>(ext[0]);
  if (rows == 0) return std::nullopt;
  // Rows above the best failing row so far can be skipped; the per-row scan
  // is serial, so the answer for each row is its own least (j, k).
  std::atomic<std::size_t> best_row{ext[0]};
  std::vector<std::array<std::size_t, 2>> found(ext[0]);

#pragma omp parallel for schedule(dynamic)
  for (long long ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i >= best_row.load(std::memory_order_relaxed)) continue;
    bool hit = false;
    for (std::size_t j = 0; j < ext[1] && !hit; ++j) {
      for (std::size_t k = 0; k < ext[2]; ++k) {
        if (!law(i, j, k)) {
          found[i] = {j, k};
          hit = true;
          break;
        }
      }
    }
    if (hit) {
      std::size_t cur = best_row.load(std::memory_order_relaxed);
      while (i < cur && !best_row.compare_exchange_weak(cur, i)) {
      }
    }
  }

  const std::size_t r = best_row.load();
  if (r == ext[0]) return std::nullopt;
  return Triple{r, found[r][0], found[r][1]};
}

template <class Law>
std::optional<Triple> first_failure(Exec exec, const Extents& ext, Law&& law) {
  if (exec == Exec::parallel) return first_failure_parallel(ext, law);
  return first_failure_serial(ext, law);
}

/// Number of worker threads the parallel kernels will use.
int worker_count();

}  // namespace mla::kernels
