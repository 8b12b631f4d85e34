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

#include "qlin/subspace.hpp"

#include <algorithm>
#include <cassert>

namespace qlin {

Fq Fq::whole(const FieldContext& c) {
    Fq f;
    f.ctx = &c;
    f.order = c.size();
    f.elems.resize(c.size());
    for (std::uint64_t i = 0; i < c.size(); ++i) f.elems[i] = static_cast<Elem>(i);
    return f;
}

Fq Fq::subfield(const FieldContext& c) {
    Fq f;
    f.ctx = &c;
    f.order = c.subfield_size();
    f.elems = c.subfield_elements();
    return f;
}

Fq Fq::standalone(std::uint64_t q) {
    if (q < 2) throw ParamError("q must be >= 2");
    std::uint64_t p64 = q;
    for (std::uint64_t c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p64 = c;
            break;
        }
    }
    const std::uint32_t p = static_cast<std::uint32_t>(p64);
    std::uint32_t s = 0;
    std::uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++s;
    }
    if (t != 1 || !is_prime(p))
        throw ParamError("q = " + std::to_string(q) + " is not a prime power");
    FieldParams params{p, s, 1, 1};
    Fq f;
    f.owned = std::make_shared<FieldContext>(params);
    f.ctx = f.owned.get();
    f.order = q;
    f.elems.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) f.elems[i] = static_cast<Elem>(i);
    return f;
}

std::uint32_t Fq::index_of(Elem a) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), a);
    if (it == elems.end() || *it != a) throw DomainError("element not in this field view");
    return static_cast<std::uint32_t>(it - elems.begin());
}

namespace {

bool basis_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis < b.basis;
}

}  // namespace

SubspaceLattice::SubspaceLattice(Fq field, std::uint32_t ambient_dim)
    : field_(std::move(field)), n_(ambient_dim) {
    vec_count_ = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
        vec_count_ *= field_.order;
        if (vec_count_ > kVectorCap)  // bail before the partial product can overflow
            throw BudgetError("subspace lattice cap exceeded: q^n > " +
                                  std::to_string(kVectorCap),
                              vec_count_);
    }

    const FieldContext& f = *field_.ctx;
    const std::uint64_t q = field_.order;

    // all RREF patterns: choose pivot columns, then fill the free entries
    for (std::uint32_t r = 0; r <= n_; ++r) {
        std::vector<std::uint32_t> piv(r);
        for (std::uint32_t i = 0; i < r; ++i) piv[i] = i;
        while (true) {
            // free positions: (i, c) with c > piv[i] and c not a pivot column
            std::vector<bool> is_piv(n_, false);
            for (std::uint32_t c : piv) is_piv[c] = true;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
            for (std::uint32_t i = 0; i < r; ++i)
                for (std::uint32_t c = piv[i] + 1; c < n_; ++c)
                    if (!is_piv[c]) free_pos.emplace_back(i, c);

            std::vector<std::uint32_t> fill(free_pos.size(), 0);
            while (true) {
                Subspace s;
                s.ambient_dim = n_;
                s.basis.assign(r, std::vector<Elem>(n_, 0));
                for (std::uint32_t i = 0; i < r; ++i) s.basis[i][piv[i]] = 1;
                for (std::size_t t = 0; t < free_pos.size(); ++t)
                    s.basis[free_pos[t].first][free_pos[t].second] = field_.elems[fill[t]];
                spaces_.push_back(std::move(s));

                // odometer over the free entries
                std::size_t pos = 0;
                while (pos < fill.size() && ++fill[pos] == q) fill[pos++] = 0;
                if (pos == fill.size() && !fill.empty()) break;
                if (fill.empty()) break;
            }

            // next pivot combination
            if (r == 0) break;
            std::int64_t i = r - 1;
            while (i >= 0 && piv[i] == n_ - r + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < r; ++j)
                piv[j] = piv[j - 1] + 1;
        }
    }

    std::sort(spaces_.begin(), spaces_.end(), basis_less);

    // membership bitmaps over packed vectors
    const std::size_t words = (vec_count_ + 63) / 64;
    members_.assign(spaces_.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t s = 0; s < spaces_.size(); ++s) {
        const Subspace& sp = spaces_[s];
        const std::uint32_t r = sp.dim();
        std::vector<std::uint32_t> coef(r, 0);
        while (true) {
            std::vector<Elem> v(n_, 0);
            for (std::uint32_t i = 0; i < r; ++i) {
                const Elem c = field_.elems[coef[i]];
                for (std::uint32_t j = 0; j < n_; ++j)
                    v[j] = f.add(v[j], f.mul(c, sp.basis[i][j]));
            }
            const std::uint64_t idx = pack_vector(v);
            members_[s][idx >> 6] |= std::uint64_t{1} << (idx & 63);
            std::size_t pos = 0;
            while (pos < coef.size() && ++coef[pos] == q) coef[pos++] = 0;
            if (pos == coef.size()) break;
        }
    }
}

std::uint64_t SubspaceLattice::pack_vector(const std::vector<Elem>& v) const {
    assert(v.size() == n_);
    std::uint64_t idx = 0;
    for (std::uint32_t i = n_; i-- > 0;) idx = idx * field_.order + field_.index_of(v[i]);
    return idx;
}

bool SubspaceLattice::contains(std::size_t outer, std::size_t inner) const {
    const auto& o = members_[outer];
    const auto& i = members_[inner];
    for (std::size_t w = 0; w < o.size(); ++w)
        if (i[w] & ~o[w]) return false;
    return true;
}

std::size_t SubspaceLattice::index_of_span(const std::vector<std::vector<Elem>>& vectors) const {
    Subspace key;
    key.ambient_dim = n_;
    key.basis = canonical_span_basis(*field_.ctx, vectors, n_);
    auto it = std::lower_bound(spaces_.begin(), spaces_.end(), key, basis_less);
    if (it == spaces_.end() || !(*it == key))
        throw InternalError("span not found in lattice; canonicalization mismatch");
    return static_cast<std::size_t>(it - spaces_.begin());
}

SubspaceLattice enumerate_subspaces(std::uint64_t q, std::uint32_t n) {
    return SubspaceLattice(Fq::standalone(q), n);
}

bool moebius_delta_check(const SubspaceLattice& lat) {
    const std::uint64_t q = lat.field().order;
    for (std::size_t u = 0; u < lat.size(); ++u) {
        BigInt sum = 0;
        for (std::size_t v = 0; v < lat.size(); ++v)
            if (lat.contains(u, v)) sum += moebius_mu(lat[v].dim(), q);
        const BigInt expect = lat[u].dim() == 0 ? 1 : 0;
        if (sum != expect) return false;
    }
    return true;
}

bool inversion_check(const SubspaceLattice& lat, const std::vector<BigInt>& f) {
    assert(f.size() == lat.size());
    const std::uint64_t q = lat.field().order;

    std::vector<BigInt> g(lat.size(), 0);
    for (std::size_t u = 0; u < lat.size(); ++u)
        for (std::size_t v = 0; v < lat.size(); ++v)
            if (lat.contains(u, v)) g[u] += f[v];

    // recover f from g
    for (std::size_t u = 0; u < lat.size(); ++u) {
        BigInt acc = 0;
        for (std::size_t v = 0; v < lat.size(); ++v)
            if (lat.contains(u, v)) acc += moebius_mu(lat[u].dim() - lat[v].dim(), q) * g[v];
        if (acc != f[u]) return false;
    }

    // converse: h = moebius transform of f, then summing h must give f back
    std::vector<BigInt> h(lat.size(), 0);
    for (std::size_t u = 0; u < lat.size(); ++u)
        for (std::size_t v = 0; v < lat.size(); ++v)
            if (lat.contains(u, v)) h[u] += moebius_mu(lat[u].dim() - lat[v].dim(), q) * f[v];
    for (std::size_t u = 0; u < lat.size(); ++u) {
        BigInt acc = 0;
        for (std::size_t v = 0; v < lat.size(); ++v)
            if (lat.contains(u, v)) acc += h[v];
        if (acc != f[u]) return false;
    }
    return true;
}

Pairing trace_pairing(const FieldContext& ctx) {
    return [&ctx](const std::vector<Elem>& u, const std::vector<Elem>& v) {
        return ctx.trace_to_subfield(ctx.mul(ctx.from_coords(u), ctx.from_coords(v)));
    };
}

Pairing gram_pairing(const FieldContext& ctx, const FieldMatrix& gram) {
    FieldMatrix g = gram;
    return [&ctx, g](const std::vector<Elem>& u, const std::vector<Elem>& v) {
        Elem s = 0;
        for (std::size_t i = 0; i < g.rows; ++i)
            for (std::size_t j = 0; j < g.cols; ++j)
                s = ctx.add(s, ctx.mul(u[i], ctx.mul(g.at(i, j), v[j])));
        return s;
    };
}

Subspace orth_complement(const FieldContext& ctx, const Subspace& v, const Pairing* pairing) {
    const std::uint32_t mu = ctx.subfield_degree();
    assert(v.ambient_dim == mu);
    Pairing def;
    if (!pairing) {
        def = trace_pairing(ctx);
        pairing = &def;
    }
    FieldMatrix a(ctx, v.dim(), mu);
    for (std::uint32_t i = 0; i < v.dim(); ++i) {
        for (std::uint32_t j = 0; j < mu; ++j) {
            std::vector<Elem> ej(mu, 0);
            ej[j] = 1;
            a.at(i, j) = (*pairing)(v.basis[i], ej);
        }
    }
    Subspace out;
    out.ambient_dim = mu;
    out.basis = kernel_basis(a);
    return out;
}

}  // namespace qlin
