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

#ifndef ONTOCHECK_KERNELS_HPP
#define ONTOCHECK_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <span>

namespace ontocheck::kernels {

/// Node-sum reductions behind every quadrature integral. All entry points
/// use a fixed blocking scheme (per-block serial partials folded in block
/// order), so results are bit-identical whether the blocks are evaluated
/// serially or by the OpenMP team, and independent of thread count.

/// Toggles OpenMP evaluation of the blocks; blocking (and therefore the
/// result) is unchanged. Enabled by default when built with OpenMP.
void set_parallel(bool enabled);
bool parallel_enabled();

double sum(std::span<const double> a);
double dot(std::span<const double> a, std::span<const double> b);
/// sum_i a_i * b_i * c_i (density * weight * response).
double triple_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c);
/// sum over i with mask_i != 0 of a_i * b_i (measure of a node set).
double masked_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const std::uint8_t> mask);
/// sum_i w_i * |a_i - b_i| (total-variation numerator).
double abs_diff_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);

/// Naive left-to-right accumulation, kept as the accuracy and speed
/// reference for the blocked kernels.
namespace ref {
double sum(std::span<const double> a);
double dot(std::span<const double> a, std::span<const double> b);
double triple_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const double> c);
double masked_dot(std::span<const double> a, std::span<const double> b,
                  std::span<const std::uint8_t> mask);
double abs_diff_dot(std::span<const double> w, std::span<const double> a,
                    std::span<const double> b);
}  // namespace ref

}  // namespace ontocheck::kernels

#endif  // ONTOCHECK_KERNELS_HPP
