/*
   Copyright 2026 The qlin authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLIN_KERNELS_HPP
#define QLIN_KERNELS_HPP

#include <cstddef>
#include <cstdint>

#include "qlin/field.hpp"

namespace qlin::kernels {

/// The enumeration-core primitive: over a whole-field table,
///
///   out[i] = base[i] + c * tab[i]        (field arithmetic)
///
/// returning how many results are zero. base == nullptr reads as the zero
/// vector; out == nullptr skips the store (count-only). This is the inner
/// pass of the brute-force weight distribution and the spectrum counting
/// enumerations.
///
/// fused_scale_add_count_zeros dispatches at runtime to an AVX2 variant for
/// p = 2 fields (XOR add, gather-based log/exp multiply) and otherwise to
/// the scalar reference below. Both variants are exact and agree bit for
/// bit; the equivalence is unit-tested.
std::uint64_t fused_scale_add_count_zeros(const FieldContext& ctx, const Elem* base,
                                          const Elem* tab, Elem c, Elem* out, std::size_t len);

/// Scalar reference semantics; the ground truth for the SIMD variants.
std::uint64_t fused_scale_add_count_zeros_scalar(const FieldContext& ctx, const Elem* base,
                                                 const Elem* tab, Elem c, Elem* out,
                                                 std::size_t len);

bool cpu_has_avx2();

/// Which variant the dispatcher would pick for this field: "avx2" or "scalar".
const char* selected_variant(const FieldContext& ctx);

}  // namespace qlin::kernels

#endif  // QLIN_KERNELS_HPP
