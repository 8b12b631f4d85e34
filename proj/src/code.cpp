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

#include "qlin/code.hpp"

#include <cassert>
#include <limits>
#include <thread>

namespace qlin {

std::uint64_t Codeword::weight() const {
    std::uint64_t w = 0;
    for (Elem v : values) w += v != 0;
    return w;
}

Codeword codeword(const LinearizedPoly& f) {
    const FieldContext& ctx = *f.ctx;
    Codeword c;
    c.values.resize(ctx.size() - 1);
    const auto [table, zeros] = evaluation_table(f);
    (void)zeros;
    for (std::uint64_t i = 0; i + 1 < ctx.size(); ++i) c.values[i] = table[ctx.exp(i)];
    return c;
}

std::uint64_t codeword_weight(const LinearizedPoly& f) {
    const FieldContext& ctx = *f.ctx;
    const std::uint64_t w = codeword(f).weight();
    const std::uint64_t via_null = ctx.size() - null_space(f).size;
    if (w != via_null)
        throw InternalError("codeword weight disagrees with p^m - |Null(f)|");
    return w;
}

const char* wd_method_name(WdMethod m) {
    switch (m) {
        case WdMethod::formula: return "formula";
        case WdMethod::brute_force: return "brute_force";
        case WdMethod::moebius: return "moebius";
    }
    return "?";
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& c : counts) t += c;
    return t;
}

std::uint64_t WeightDistribution::weight_of(std::uint32_t r) const {
    return ipow_u64(params.p, params.m) - ipow_u64(params.p, params.e() * r);
}

WeightDistribution weight_distribution_formula(const FieldParams& params) {
    params.validate(std::uint64_t{1} << 62);  // no tables needed, only sizes
    const std::uint64_t p = params.p;
    const std::uint32_t e = params.e();
    const std::uint32_t mu = params.subfield_degree();
    const std::uint64_t qe = ipow_u64(p, e);
    const BigInt bp = p;

    WeightDistribution wd;
    wd.params = params;
    wd.method = WdMethod::formula;
    wd.counts.resize(params.k);
    for (std::uint32_t r = 0; r < params.k; ++r) {
        BigInt sum = 0;
        for (std::uint32_t i = 0; i + r + 1 <= params.k; ++i) {
            BigInt term = big_pow(bp, static_cast<std::uint64_t>(e) * i * (i - (i ? 1 : 0)) / 2) *
                          gaussian_binom(mu - r, i, qe) *
                          (big_pow(bp, static_cast<std::uint64_t>(params.m) * (params.k - r - i)) - 1);
            if (i % 2)
                sum -= term;
            else
                sum += term;
        }
        BigInt n_r = gaussian_binom(mu, r, qe) * sum;
        if (n_r < 0) throw InternalError("negative frequency from the closed form");
        wd.counts[r] = std::move(n_r);
    }
    return wd;
}

namespace {

// maps an observed null-space size p^(e r) to r; rejects stray sizes
std::uint32_t null_size_to_r(const FieldContext& ctx, std::uint64_t size) {
    const std::uint64_t qe = ctx.subfield_size();
    std::uint64_t s = size;
    std::uint32_t r = 0;
    while (s > 1) {
        if (s % qe != 0)
            throw InternalError("null space size is not a power of p^e");
        s /= qe;
        ++r;
    }
    return r;
}

}  // namespace

WeightDistribution weight_distribution_bruteforce(const FieldContext& ctx, std::uint64_t budget,
                                                  unsigned workers) {
    const std::uint64_t q = ctx.size();
    const std::uint32_t k = ctx.k();
    std::uint64_t needed = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (needed > budget / q) {
            const BigInt full = big_pow(BigInt(ctx.p()), static_cast<std::uint64_t>(ctx.m()) * k);
            throw BudgetError("brute force needs p^(mk) = " + full.str() +
                                  " enumerations, over the budget " + std::to_string(budget),
                              full > std::numeric_limits<std::uint64_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(full));
        }
        needed *= q;
    }

    const std::uint32_t mu = ctx.subfield_degree();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, q));

    // per-worker buckets indexed by r = 0..m/e (the top slot catches a = 0)
    std::vector<std::vector<std::uint64_t>> buckets(workers,
                                                    std::vector<std::uint64_t>(mu + 1, 0));
    FrobeniusTables tabs(ctx);

    auto run = [&](unsigned w) {
        const Elem lo = static_cast<Elem>(q * w / workers);
        const Elem hi = static_cast<Elem>(q * (w + 1) / workers);
        auto& bucket = buckets[w];
        for_each_poly_evaluation(
            tabs, lo, hi, false,
            [&](const std::vector<Elem>&, const Elem*, std::uint64_t zeros) {
                bucket[null_size_to_r(ctx, zeros)] += 1;
            });
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::uint64_t> merged(mu + 1, 0);
    for (const auto& b : buckets)
        for (std::uint32_t r = 0; r <= mu; ++r) merged[r] += b[r];

    // a = 0 is the unique vector with the whole field as null space; every
    // a != 0 lands at r <= k-1
    if (merged[mu] != 1)
        throw InternalError("brute force: expected exactly one all-zero coefficient vector");
    for (std::uint32_t r = k; r < mu; ++r)
        if (merged[r] != 0) throw InternalError("brute force: null dimension out of range");

    WeightDistribution wd;
    wd.params = ctx.params();
    wd.method = WdMethod::brute_force;
    wd.counts.resize(k);
    for (std::uint32_t r = 0; r < k; ++r) wd.counts[r] = merged[r];
    return wd;
}

BigInt c_v_count(const FieldContext& ctx, const Subspace& v, const Pairing* pairing) {
    const Subspace perp = orth_complement(ctx, v, pairing);
    std::vector<Elem> xs;
    for (const auto& row : perp.basis) xs.push_back(ctx.from_coords(row));
    const FieldMatrix moore = moore_matrix(ctx, xs, ctx.k());
    const std::size_t kernel_dim = ctx.k() - rank(moore);
    const BigInt count = big_pow(BigInt(ctx.size()), kernel_dim);

    // closed-form cross-check: 1 when dim V^perp >= k, else p^(m(k - dim))
    const std::uint32_t dim_perp = perp.dim();
    const BigInt expect = dim_perp >= ctx.k()
                              ? BigInt(1)
                              : big_pow(BigInt(ctx.size()), ctx.k() - dim_perp);
    if (count != expect) throw InternalError("|C_V| disagrees with the rank-based closed form");
    return count;
}

WeightDistribution weight_distribution_moebius(const FieldContext& ctx, const Pairing* pairing) {
    const std::uint32_t mu = ctx.subfield_degree();
    const std::uint64_t qe = ctx.subfield_size();
    SubspaceLattice lat(Fq::subfield(ctx), mu);

    // |C_V| - 1 for every subspace, then Möbius-invert to |S_V| restricted
    // to a != 0, and bucket by dim V^perp = mu - dim V
    std::vector<BigInt> c_minus_1(lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i)
        c_minus_1[i] = c_v_count(ctx, lat[i], pairing) - 1;

    WeightDistribution wd;
    wd.params = ctx.params();
    wd.method = WdMethod::moebius;
    wd.counts.assign(ctx.k(), 0);
    for (std::size_t vi = 0; vi < lat.size(); ++vi) {
        const std::uint32_t dim_v = lat[vi].dim();
        const std::uint32_t r = mu - dim_v;  // dim V^perp
        if (r >= ctx.k()) continue;          // those S_V are empty for a != 0
        BigInt s_v = 0;
        for (std::size_t wi = 0; wi < lat.size(); ++wi)
            if (lat.contains(vi, wi))
                s_v += moebius_mu(dim_v - lat[wi].dim(), qe) * c_minus_1[wi];
        wd.counts[r] += s_v;
    }
    for (const BigInt& c : wd.counts)
        if (c < 0) throw InternalError("negative frequency from the Möbius route");
    return wd;
}

}  // namespace qlin
