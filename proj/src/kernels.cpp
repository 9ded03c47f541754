// Copyright 2026 the ontocheck authors
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

#include "ontocheck/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

namespace ontocheck::kernels {

namespace {

constexpr std::size_t kBlock = 1024;

std::atomic<bool> g_parallel{true};

/// Evaluates one partial per block with the supplied serial kernel, then
/// folds the partials in block order. The fold is serial either way; only
/// block evaluation is parallel, which keeps the sum order fixed.
template <class BlockFn>
double blocked(std::size_t n, BlockFn&& block_partial) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks);
#ifdef _OPENMP
    if (g_parallel.load(std::memory_order_relaxed)) {
#pragma omp parallel for schedule(static)
        for (std::size_t bi = 0; bi < nblocks; ++bi) {
            const std::size_t lo = bi * kBlock;
            partial[bi] = block_partial(lo, std::min(lo + kBlock, n));
        }
    } else
#endif
    {
        for (std::size_t bi = 0; bi < nblocks; ++bi) {
            const std::size_t lo = bi * kBlock;
            partial[bi] = block_partial(lo, std::min(lo + kBlock, n));
        }
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

}  // namespace

void set_parallel(bool enabled) { g_parallel.store(enabled, std::memory_order_relaxed); }
bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

double sum(std::span<const double> a) {
    return blocked(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i];
        return s;
    });
}

double dot(std::span<const double> a, std::span<const double> b) {
    return blocked(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        return s;
    });
}

double triple_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c) {
    return blocked(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i] * c[i];
        return s;
    });
}

double masked_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const std::uint8_t> mask) {
    return blocked(a.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            if (mask[i]) s += a[i] * b[i];
        }
        return s;
    });
}

double abs_diff_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
    return blocked(w.size(), [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += w[i] * std::fabs(a[i] - b[i]);
        return s;
    });
}

namespace ref {

double sum(std::span<const double> a) {
    double s = 0.0;
    for (double x : a) s += x;
    return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double triple_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i] * c[i];
    return s;
}

double masked_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const std::uint8_t> mask) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask[i]) s += a[i] * b[i];
    }
    return s;
}

double abs_diff_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * std::fabs(a[i] - b[i]);
    return s;
}

}  // namespace ref

}  // namespace ontocheck::kernels
