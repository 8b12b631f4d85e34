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

// AVX2 variant of the fused enumeration pass for characteristic-2 fields.
// Deliberately includes no project headers: this translation unit is built
// with -mavx2 and must not instantiate inline functions shared with
// baseline-ISA translation units.

#if defined(__x86_64__)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace qlin::kernels {

// out[i] = base[i] XOR (c * tab[i]) in GF(2^m) via log/exp gathers, with a
// running zero count. Caller guarantees c != 0 (log_c = log(c)), tab values
// are field elements < q, and log_table[0] == 0 so every gathered index
// stays in bounds even on zero lanes.
std::uint64_t fused_axpy_count_avx2(const std::uint32_t* log_table,
                                    const std::uint32_t* exp_table, std::uint32_t qm1,
                                    std::uint32_t log_c, const std::uint32_t* base,
                                    const std::uint32_t* tab, std::uint32_t* out,
                                    std::size_t len) {
    const __m256i vlogc = _mm256_set1_epi32(static_cast<int>(log_c));
    const __m256i vqm1 = _mm256_set1_epi32(static_cast<int>(qm1));
    const __m256i vqm1m1 = _mm256_set1_epi32(static_cast<int>(qm1) - 1);
    const __m256i vzero = _mm256_setzero_si256();
    const __m256i vones = _mm256_set1_epi32(-1);

    std::uint64_t zeros = 0;
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        const __m256i t = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(tab + i));
        const __m256i t_is_zero = _mm256_cmpeq_epi32(t, vzero);
        const __m256i t_nonzero = _mm256_xor_si256(t_is_zero, vones);
        const __m256i lg =
            _mm256_i32gather_epi32(reinterpret_cast<const int*>(log_table), t, 4);
        __m256i s = _mm256_add_epi32(lg, vlogc);
        // reduce mod qm1: s < 2*qm1, and qm1 < 2^24 keeps the compare signed-safe
        const __m256i wrap = _mm256_cmpgt_epi32(s, vqm1m1);
        s = _mm256_sub_epi32(s, _mm256_and_si256(wrap, vqm1));
        const __m256i prod = _mm256_mask_i32gather_epi32(
            vzero, reinterpret_cast<const int*>(exp_table), s, t_nonzero, 4);
        const __m256i b =
            base ? _mm256_loadu_si256(reinterpret_cast<const __m256i*>(base + i)) : vzero;
        const __m256i o = _mm256_xor_si256(b, prod);
        if (out) _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), o);
        const __m256i z = _mm256_cmpeq_epi32(o, vzero);
        zeros += static_cast<unsigned>(
            __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(z)))));
    }
    for (; i < len; ++i) {
        const std::uint32_t t = tab[i];
        std::uint32_t prod = 0;
        if (t != 0) {
            std::uint32_t s = log_table[t] + log_c;
            if (s >= qm1) s -= qm1;
            prod = exp_table[s];
        }
        const std::uint32_t o = (base ? base[i] : 0u) ^ prod;
        if (out) out[i] = o;
        zeros += o == 0;
    }
    return zeros;
}

}  // namespace qlin::kernels

#endif  // __x86_64__
