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

#include "qlin/linearized.hpp"

#include <algorithm>
#include <cassert>

#include "qlin/kernels.hpp"

namespace qlin {

namespace {

constexpr std::uint64_t kExhaustiveNullCap = std::uint64_t{1} << 20;

#ifndef NDEBUG
// k <= m/e makes the reduced Frobenius exponents j*d mod m pairwise distinct
void assert_distinct_exponents(const FieldContext& ctx, std::size_t k) {
    std::vector<std::uint32_t> exps;
    for (std::size_t j = 0; j < k; ++j)
        exps.push_back(static_cast<std::uint32_t>(j * ctx.d() % ctx.m()));
    std::sort(exps.begin(), exps.end());
    assert(std::adjacent_find(exps.begin(), exps.end()) == exps.end());
}
#endif

}  // namespace

Elem evaluate(const LinearizedPoly& f, Elem x) {
    const FieldContext& ctx = *f.ctx;
    assert(f.coeffs.size() == ctx.k());
#ifndef NDEBUG
    assert_distinct_exponents(ctx, f.coeffs.size());
#endif
    Elem s = 0;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        s = ctx.add(s, ctx.mul(f.coeffs[j], ctx.frobenius(x, static_cast<std::uint32_t>(
                             static_cast<std::uint64_t>(j) * ctx.d() % ctx.m()))));
    return s;
}

FieldMatrix subfield_matrix(const LinearizedPoly& f) {
    const FieldContext& ctx = *f.ctx;
    const std::uint32_t mu = ctx.subfield_degree();
    FieldMatrix m(ctx, mu, mu);
    Elem basis_elem = 1;
    for (std::uint32_t i = 0; i < mu; ++i) {
        const auto col = ctx.coords_over_subfield(evaluate(f, basis_elem));
        for (std::uint32_t r = 0; r < mu; ++r) m.at(r, i) = col[r];
        basis_elem = ctx.mul(basis_elem, ctx.pi());
    }
    return m;
}

std::pair<std::vector<Elem>, std::uint64_t> evaluation_table(const LinearizedPoly& f) {
    const FieldContext& ctx = *f.ctx;
    const std::size_t q = ctx.size();
    FrobeniusTables tabs(ctx);
    std::vector<Elem> values(q, 0);
    std::uint64_t zeros = q;
    for (std::uint32_t j = 0; j < f.coeffs.size(); ++j) {
        zeros = kernels::fused_scale_add_count_zeros(ctx, j == 0 ? nullptr : values.data(),
                                                     tabs.table(j), f.coeffs[j], values.data(), q);
    }
    return {std::move(values), zeros};
}

NullSpaceResult null_space(const LinearizedPoly& f) {
    const FieldContext& ctx = *f.ctx;
    const FieldMatrix m = subfield_matrix(f);
    NullSpaceResult res;
    res.basis = kernel_basis(m);
    res.r = static_cast<std::uint32_t>(res.basis.size());
    res.size = ipow_u64(ctx.subfield_size(), res.r);

    if (ctx.size() <= kExhaustiveNullCap) {
        const auto [values, zeros] = evaluation_table(f);
        (void)values;
        if (zeros != res.size)
            throw InternalError("null space size mismatch between enumeration and kernel method");
    }
    return res;
}

bool image_contains(const LinearizedPoly& f, Elem y) {
    if (y == 0) return true;
    const FieldContext& ctx = *f.ctx;
    const std::uint32_t mu = ctx.subfield_degree();
    const FieldMatrix m = subfield_matrix(f);
    FieldMatrix aug(ctx, mu, mu + 1);
    for (std::uint32_t r = 0; r < mu; ++r)
        for (std::uint32_t c = 0; c < mu; ++c) aug.at(r, c) = m.at(r, c);
    const auto yc = ctx.coords_over_subfield(y);
    for (std::uint32_t r = 0; r < mu; ++r) aug.at(r, mu) = yc[r];
    return rank(m) == rank(aug);
}

std::uint64_t image_size(const LinearizedPoly& f) {
    return f.ctx->size() / null_space(f).size;
}

FieldMatrix moore_matrix(const FieldContext& ctx, const std::vector<Elem>& xs, std::uint32_t k) {
    FieldMatrix m(ctx, xs.size(), k);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            m.at(i, j) = ctx.frobenius(
                xs[i], static_cast<std::uint32_t>(static_cast<std::uint64_t>(j) * ctx.d() % ctx.m()));
    return m;
}

bool is_full_rank(const FieldMatrix& m) { return rank(m) == std::min(m.rows, m.cols); }

bool subfield_independent(const FieldContext& ctx, const std::vector<Elem>& xs) {
    const std::uint32_t mu = ctx.subfield_degree();
    FieldMatrix m(ctx, xs.size(), mu);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto c = ctx.coords_over_subfield(xs[i]);
        for (std::uint32_t j = 0; j < mu; ++j) m.at(i, j) = c[j];
    }
    return rank(m) == xs.size();
}

FrobeniusTables::FrobeniusTables(const FieldContext& ctx) : ctx_(&ctx) {
    const std::uint64_t q = ctx.size();
    const std::uint64_t qm1 = q - 1;
    const std::uint32_t k = ctx.k();
#ifndef NDEBUG
    assert_distinct_exponents(ctx, k);
#endif
    t_.assign(k, std::vector<Elem>(q, 0));
    for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint64_t mult = ctx.frob_multiplier(
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(j) * ctx.d() % ctx.m()));
        for (std::uint64_t i = 0; i < qm1; ++i)
            t_[j][ctx.exp(i)] = ctx.exp((i * mult) % qm1);
    }
}

void for_each_poly_evaluation(
    const FrobeniusTables& tabs, Elem lo0, Elem hi0, bool need_values,
    const std::function<void(const std::vector<Elem>&, const Elem*, std::uint64_t)>& visit) {
    const FieldContext& ctx = tabs.ctx();
    const std::size_t q = ctx.size();
    const std::uint32_t k = tabs.terms();
    std::vector<std::vector<Elem>> partial(k, std::vector<Elem>(q, 0));
    std::vector<Elem> a(k, 0);

    // depth-first odometer over coefficients; partial[j] holds the running
    // sum of the first j+1 terms evaluated over the whole field
    auto rec = [&](auto&& self, std::uint32_t j) -> void {
        const Elem* base = j == 0 ? nullptr : partial[j - 1].data();
        const Elem lo = j == 0 ? lo0 : 0;
        const Elem hi = j == 0 ? hi0 : static_cast<Elem>(q);
        for (Elem c = lo; c < hi; ++c) {
            a[j] = c;
            if (j + 1 == k) {
                Elem* out = need_values ? partial[j].data() : nullptr;
                const std::uint64_t zeros =
                    kernels::fused_scale_add_count_zeros(ctx, base, tabs.table(j), c, out, q);
                visit(a, out, zeros);
            } else {
                kernels::fused_scale_add_count_zeros(ctx, base, tabs.table(j), c,
                                                     partial[j].data(), q);
                self(self, j + 1);
            }
        }
    };
    if (lo0 < hi0) rec(rec, 0);
}

}  // namespace qlin
