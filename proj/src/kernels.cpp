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

#include "qlin/kernels.hpp"

namespace qlin::kernels {

#if defined(__x86_64__) && defined(QLIN_HAVE_AVX2_TU)
// defined in kernels_avx2.cpp, compiled with -mavx2
std::uint64_t fused_axpy_count_avx2(const std::uint32_t* log_table,
                                    const std::uint32_t* exp_table, std::uint32_t qm1,
                                    std::uint32_t log_c, const std::uint32_t* base,
                                    const std::uint32_t* tab, std::uint32_t* out,
                                    std::size_t len);
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(QLIN_HAVE_AVX2_TU)
    static const bool has = __builtin_cpu_supports("avx2");
    return has;
#else
    return false;
#endif
}

namespace {

std::uint64_t copy_base_count_zeros(const Elem* base, Elem* out, std::size_t len) {
    std::uint64_t zeros = 0;
    if (!base) {
        if (out)
            for (std::size_t i = 0; i < len; ++i) out[i] = 0;
        return len;
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (out) out[i] = base[i];
        zeros += base[i] == 0;
    }
    return zeros;
}

}  // namespace

std::uint64_t fused_scale_add_count_zeros_scalar(const FieldContext& ctx, const Elem* base,
                                                 const Elem* tab, Elem c, Elem* out,
                                                 std::size_t len) {
    if (c == 0) return copy_base_count_zeros(base, out, len);
    std::uint64_t zeros = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const Elem v = ctx.add(base ? base[i] : 0u, ctx.mul(c, tab[i]));
        if (out) out[i] = v;
        zeros += v == 0;
    }
    return zeros;
}

std::uint64_t fused_scale_add_count_zeros(const FieldContext& ctx, const Elem* base,
                                          const Elem* tab, Elem c, Elem* out, std::size_t len) {
    if (c == 0) return copy_base_count_zeros(base, out, len);
#if defined(__x86_64__) && defined(QLIN_HAVE_AVX2_TU)
    if (ctx.p() == 2 && len >= 32 && cpu_has_avx2()) {
        return fused_axpy_count_avx2(ctx.log_table(), ctx.exp_table(),
                                     static_cast<std::uint32_t>(ctx.size() - 1), ctx.log(c),
                                     base, tab, out, len);
    }
#endif
    return fused_scale_add_count_zeros_scalar(ctx, base, tab, c, out, len);
}

const char* selected_variant(const FieldContext& ctx) {
    if (ctx.p() == 2 && ctx.size() >= 32 && cpu_has_avx2()) return "avx2";
    return "scalar";
}

}  // namespace qlin::kernels
