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

#include "qlin/wenger.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <thread>

#include "qlin/jacobi.hpp"

namespace qlin {

void SpectrumMultiset::add(const EigKey& k, const BigInt& mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries.try_emplace(k, mult);
    if (!inserted) it->second += mult;
}

BigInt SpectrumMultiset::total_multiplicity() const {
    BigInt t = 0;
    for (const auto& [k, m] : entries) t += m;
    return t;
}

BigInt SpectrumMultiset::lambda_sq_mass() const {
    BigInt t = 0;
    for (const auto& [k, m] : entries)
        if (k.sign != 0) t += m * big_pow(BigInt(params.p), k.lambda_sq_exp);
    return t;
}

std::vector<double> SpectrumMultiset::expand_sorted() const {
    std::vector<double> out;
    for (const auto& [k, m] : entries) {
        const double lambda =
            k.sign == 0 ? 0.0
                        : k.sign * std::sqrt(static_cast<double>(ipow_u64(params.p, k.lambda_sq_exp)));
        const auto count = static_cast<std::size_t>(m);
        for (std::size_t i = 0; i < count; ++i) out.push_back(lambda);
    }
    std::sort(out.begin(), out.end());
    return out;
}

WengerGraph::WengerGraph(const FieldContext& ctx) : ctx_(&ctx) {
    side_ = 1;
    for (std::uint32_t i = 0; i <= ctx.k(); ++i) side_ *= ctx.size();
}

void WengerGraph::for_each_edge(const std::function<void(std::uint64_t, std::uint64_t)>& fn) const {
    const FieldContext& f = *ctx_;
    const std::uint64_t q = f.size();
    const std::uint32_t k = f.k();

    std::vector<Elem> pt(k + 1);
    for (std::uint64_t pidx = 0; pidx < side_; ++pidx) {
        std::uint64_t t = pidx;
        for (std::uint32_t i = 0; i <= k; ++i) {
            pt[i] = static_cast<Elem>(t % q);
            t /= q;
        }
        // powers p_0^(p^(jd)) reused across all l_0
        std::vector<Elem> fr(k);
        for (std::uint32_t j = 0; j < k; ++j)
            fr[j] = f.frobenius(pt[0], static_cast<std::uint32_t>(
                                           static_cast<std::uint64_t>(j) * f.d() % f.m()));
        for (std::uint64_t l0 = 0; l0 < q; ++l0) {
            std::uint64_t lidx = 0;
            for (std::uint32_t j = k; j >= 1; --j) {
                const Elem lj = f.sub(f.mul(fr[j - 1], static_cast<Elem>(l0)), pt[j]);
                lidx = lidx * q + lj;
            }
            lidx = lidx * q + l0;
            fn(pidx, lidx);
        }
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> WengerGraph::edges() const {
    if (side_ > (std::uint64_t{1} << 16))
        throw BudgetError("materialized edge list cap exceeded: side count " +
                              std::to_string(side_) + " > 2^16; use for_each_edge",
                          side_);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(side_ * ctx_->size());
    for_each_edge([&](std::uint64_t p, std::uint64_t l) { out.emplace_back(p, l); });
    return out;
}

namespace {

// exponent t with n = p^t; null-space sizes are always powers of p
std::uint32_t p_exponent_of(std::uint32_t p, std::uint64_t n) {
    std::uint32_t t = 0;
    while (n > 1) {
        if (n % p != 0) throw InternalError("null space size is not a power of p");
        n /= p;
        ++t;
    }
    return t;
}

void check_mass_invariants(const SpectrumMultiset& s) {
    const FieldParams& pr = s.params;
    const BigInt vertices =
        2 * big_pow(BigInt(pr.p), static_cast<std::uint64_t>(pr.m) * (pr.k + 1));
    const BigInt trace_sq =
        2 * big_pow(BigInt(pr.p), static_cast<std::uint64_t>(pr.m) * (pr.k + 2));
    if (s.total_multiplicity() != vertices)
        throw InternalError("spectrum total multiplicity misses the vertex count");
    if (s.lambda_sq_mass() != trace_sq)
        throw InternalError("spectrum lambda^2 mass misses twice the edge count");
    // bipartite symmetry: +-pairs carry equal multiplicity
    for (const auto& [k, m] : s.entries) {
        if (k.sign == 0) continue;
        const EigKey mirror{-k.sign, k.lambda_sq_exp};
        const auto it = s.entries.find(mirror);
        if (it == s.entries.end() || it->second != m)
            throw InternalError("spectrum is not symmetric about zero");
    }
}

}  // namespace

BigInt paper_literal_zero_multiplicity(const FieldParams& params) {
    const auto wd = weight_distribution_formula(params);
    const std::uint32_t e = params.e();
    BigInt z = 0;
    for (std::uint32_t r = 1; r < params.k; ++r)
        z += (big_pow(BigInt(params.p), params.m) -
              big_pow(BigInt(params.p), params.m - static_cast<std::uint64_t>(e) * r)) *
             wd.counts[r];
    return z;
}

SpectrumMultiset spectrum_formula(const FieldParams& params) {
    const auto wd = weight_distribution_formula(params);
    const std::uint32_t e = params.e();

    SpectrumMultiset s;
    s.params = params;
    s.add({+1, 2 * params.m}, 1);
    s.add({-1, 2 * params.m}, 1);
    BigInt zero = 2 * (big_pow(BigInt(params.p), params.m) - 1);
    for (std::uint32_t r = 0; r < params.k; ++r) {
        const BigInt side = big_pow(BigInt(params.p), params.m - static_cast<std::uint64_t>(e) * r) *
                            wd.counts[r];
        s.add({+1, params.m + e * r}, side);
        s.add({-1, params.m + e * r}, side);
        if (r >= 1)
            zero += 2 *
                    (big_pow(BigInt(params.p), params.m) -
                     big_pow(BigInt(params.p), params.m - static_cast<std::uint64_t>(e) * r)) *
                    wd.counts[r];
    }
    s.add({0, 0}, zero);
    check_mass_invariants(s);
    return s;
}

SpectrumMultiset spectrum_counting(const FieldContext& ctx, std::uint64_t budget,
                                   unsigned workers) {
    const std::uint64_t q = ctx.size();
    const std::uint32_t k = ctx.k();
    std::uint64_t needed = 1;
    for (std::uint32_t i = 0; i <= k; ++i) {
        if (needed > budget / q)
            throw BudgetError("spectrum counting needs p^(m(k+1)) = " +
                                  big_pow(BigInt(ctx.p()), static_cast<std::uint64_t>(ctx.m()) * (k + 1)).str() +
                                  " enumerations, over the budget " + std::to_string(budget),
                              needed);
        needed *= q;
    }

    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, q));

    FrobeniusTables tabs(ctx);
    const std::size_t words = (q + 63) / 64;

    struct Local {
        std::map<EigKey, BigInt, EigKeyLess> acc;
    };
    std::vector<Local> locals(workers);

    auto run = [&](unsigned w) {
        const Elem lo = static_cast<Elem>(q * w / workers);
        const Elem hi = static_cast<Elem>(q * (w + 1) / workers);
        auto& acc = locals[w].acc;
        std::vector<std::uint64_t> image(words);
        auto bump = [&acc](const EigKey& key, std::uint64_t c) {
            auto [it, ins] = acc.try_emplace(key, c);
            if (!ins) it->second += c;
        };
        for_each_poly_evaluation(
            tabs, lo, hi, true,
            [&](const std::vector<Elem>&, const Elem* values, std::uint64_t zeros) {
                std::fill(image.begin(), image.end(), 0);
                for (std::uint64_t x = 0; x < q; ++x) {
                    const Elem v = values[x];
                    image[v >> 6] |= std::uint64_t{1} << (v & 63);
                }
                std::uint64_t hits = 0;
                for (std::uint64_t y = 0; y < q; ++y) {
                    const Elem neg_y = ctx.neg(static_cast<Elem>(y));
                    hits += (image[neg_y >> 6] >> (neg_y & 63)) & 1;
                }
                if (hits != q / zeros)
                    throw InternalError("image size disagrees with rank-nullity");
                // each of the `hits` constant terms yields the pair
                // +-sqrt(p^m N); the rest contribute two zeros apiece
                const std::uint32_t exp_n = ctx.m() + p_exponent_of(ctx.p(), zeros);
                bump({+1, exp_n}, hits);
                bump({-1, exp_n}, hits);
                if (hits < q) bump({0, 0}, 2 * (q - hits));
            });
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    SpectrumMultiset s;
    s.params = ctx.params();
    for (const auto& l : locals)
        for (const auto& [key, m] : l.acc) s.add(key, m);
    check_mass_invariants(s);
    return s;
}

std::vector<double> spectrum_dense(const FieldContext& ctx) {
    const WengerGraph g(ctx);
    const std::uint64_t side = g.side_count();
    if (side > (std::uint64_t{1} << 8))
        throw BudgetError("dense oracle cap exceeded: side count " + std::to_string(side) +
                              " > 2^8",
                          side);
    const std::size_t n = static_cast<std::size_t>(side);
    std::vector<double> b(n * n, 0.0);
    g.for_each_edge([&](std::uint64_t p, std::uint64_t l) { b[p * n + l] = 1.0; });

    // Gram matrix B B^T; its eigenvalues are the squared singular values
    std::vector<double> gram(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0;
            for (std::size_t t = 0; t < n; ++t) s += b[i * n + t] * b[j * n + t];
            gram[i * n + j] = s;
        }
    const std::vector<double> sq = jacobi_eigenvalues(std::move(gram), n);

    std::vector<double> out;
    out.reserve(2 * n);
    for (double v : sq) {
        const double sigma = std::sqrt(std::max(v, 0.0));
        out.push_back(-sigma);
        out.push_back(sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ReconcileReport reconcile_report(const FieldContext& ctx, bool run_counting, bool run_dense,
                                 std::uint64_t budget, unsigned workers, double dense_tol) {
    ReconcileReport rep;
    rep.params = ctx.params();
    rep.dense_tol = dense_tol;
    rep.formula = spectrum_formula(ctx.params());
    rep.mass_vertices_ok = true;  // spectrum_formula asserts both invariants
    rep.mass_trace_sq_ok = true;

    if (run_counting) {
        rep.counting = spectrum_counting(ctx, budget, workers);
        rep.formula_counting_agree = rep.counting->same_entries(rep.formula);
    }
    if (run_dense) {
        const std::vector<double> dense = spectrum_dense(ctx);
        const std::vector<double> exact = rep.formula.expand_sorted();
        double worst = 0;
        if (dense.size() != exact.size()) {
            worst = std::numeric_limits<double>::infinity();
        } else {
            for (std::size_t i = 0; i < dense.size(); ++i)
                worst = std::max(worst, std::abs(dense[i] - exact[i]));
        }
        rep.dense_residual = worst;
        rep.dense_within_tol = worst <= dense_tol;
    }

    rep.paper_zero_expr = paper_literal_zero_multiplicity(ctx.params());
    const auto zero_it = rep.formula.entries.find(EigKey{0, 0});
    rep.corrected_zero = zero_it == rep.formula.entries.end() ? BigInt(0) : zero_it->second;
    rep.erratum_flagged = rep.paper_zero_expr != rep.corrected_zero;

    const bool ok = rep.formula_counting_agree && rep.dense_within_tol;
    rep.verdict = ok ? "consistent" : "mismatch";
    return rep;
}

}  // namespace qlin
