#include <doctest.h>

#include <set>

#include "qlin/rng.hpp"
#include "qlin/subspace.hpp"

using namespace qlin;

TEST_CASE("enumerate_subspaces counts") {
    CHECK(enumerate_subspaces(2, 1).size() == 2);
    CHECK(enumerate_subspaces(2, 2).size() == 5);
    CHECK(enumerate_subspaces(2, 3).size() == 16);

    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto lat = enumerate_subspaces(q, n);
        BigInt galois = 0;
        std::vector<BigInt> per_dim(n + 1, 0);
        for (std::size_t i = 0; i < lat.size(); ++i) per_dim[lat[i].dim()] += 1;
        for (std::uint32_t dim = 0; dim <= n; ++dim) {
            CAPTURE(q);
            CAPTURE(n);
            CAPTURE(dim);
            CHECK(per_dim[dim] == gaussian_binom(n, dim, q));
            galois += per_dim[dim];
        }
        CHECK(galois == lat.size());

        // canonical and duplicate-free
        std::set<std::vector<std::vector<Elem>>> keys;
        for (std::size_t i = 0; i < lat.size(); ++i) keys.insert(lat[i].basis);
        CHECK(keys.size() == lat.size());
    }
}

TEST_CASE("enumerate_subspaces rejects non prime powers and cap violations") {
    CHECK_THROWS_AS(enumerate_subspaces(6, 2), ParamError);
    CHECK_THROWS_AS(enumerate_subspaces(2, 20), BudgetError);
}

TEST_CASE("moebius delta identity on the lattice grid") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        CAPTURE(q);
        CAPTURE(n);
        CHECK(moebius_delta_check(enumerate_subspaces(q, n)));
    }
}

TEST_CASE("moebius delta hand values on the (2,2) lattice") {
    const auto lat = enumerate_subspaces(2, 2);
    // 1 zero space, 3 lines with mu = -1, full plane mu = +2
    BigInt total = 0;
    for (std::size_t i = 0; i < lat.size(); ++i) total += moebius_mu(lat[i].dim(), 2);
    CHECK(total == 1 - 3 + 2);
    CHECK(total == 0);
    const auto lat3 = enumerate_subspaces(3, 2);
    BigInt total3 = 0;
    for (std::size_t i = 0; i < lat3.size(); ++i) total3 += moebius_mu(lat3[i].dim(), 3);
    CHECK(total3 == 1 - 4 + 3);
}

TEST_CASE("inversion round-trips") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto lat = enumerate_subspaces(q, n);
        std::vector<BigInt> zero(lat.size(), 0);
        CHECK(inversion_check(lat, zero));

        std::vector<BigInt> delta(lat.size(), 0);
        for (std::size_t i = 0; i < lat.size(); ++i)
            if (lat[i].dim() == 0) delta[i] = 1;
        CHECK(inversion_check(lat, delta));

        SplitMix64 rng(1234 + q * 100 + n);
        std::vector<BigInt> f(lat.size());
        for (auto& v : f) v = BigInt(static_cast<std::int64_t>(rng.next() % 2001) - 1000);
        CAPTURE(q);
        CAPTURE(n);
        CHECK(inversion_check(lat, f));
    }
}

namespace {

// exhaustive oracle: V^perp by scanning all coordinate vectors
std::set<std::vector<Elem>> orth_members_oracle(const FieldContext& f, const Subspace& v) {
    const std::uint32_t mu = f.subfield_degree();
    const auto& sub = f.subfield_elements();
    std::set<std::vector<Elem>> out;
    std::vector<std::uint32_t> idx(mu, 0);
    while (true) {
        std::vector<Elem> y(mu);
        for (std::uint32_t i = 0; i < mu; ++i) y[i] = sub[idx[i]];
        bool orth = true;
        for (const auto& x : v.basis) {
            const Elem pair =
                f.trace_to_subfield(f.mul(f.from_coords(x), f.from_coords(y)));
            if (pair != 0) orth = false;
        }
        if (orth) out.insert(y);
        std::size_t pos = 0;
        while (pos < mu && ++idx[pos] == sub.size()) idx[pos++] = 0;
        if (pos == mu) break;
    }
    return out;
}

std::set<std::vector<Elem>> span_members(const FieldContext& f, const Subspace& s) {
    const auto& sub = f.subfield_elements();
    std::set<std::vector<Elem>> out;
    std::vector<std::uint32_t> coef(s.dim(), 0);
    while (true) {
        std::vector<Elem> v(s.ambient_dim, 0);
        for (std::uint32_t i = 0; i < s.dim(); ++i)
            for (std::uint32_t j = 0; j < s.ambient_dim; ++j)
                v[j] = f.add(v[j], f.mul(sub[coef[i]], s.basis[i][j]));
        out.insert(v);
        std::size_t pos = 0;
        while (pos < coef.size() && ++coef[pos] == sub.size()) coef[pos++] = 0;
        if (pos == coef.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("orth_complement in GF(4) over F_2") {
    FieldContext f(FieldParams{2, 2, 1, 2});
    Subspace v;
    v.ambient_dim = 2;
    v.basis = {{1, 0}};  // span{1} in the basis (1, pi)

    const Subspace perp = orth_complement(f, v);
    CHECK(perp.dim() == 1);
    // trace(1*1) = 0 makes span{1} self-orthogonal in characteristic 2,
    // while trace(1*pi) = 1 excludes pi; the 16-pair oracle agrees
    CHECK(perp.basis == std::vector<std::vector<Elem>>{{1, 0}});
    CHECK(span_members(f, perp) == orth_members_oracle(f, v));

    Subspace zero;
    zero.ambient_dim = 2;
    const Subspace all = orth_complement(f, zero);
    CHECK(all.dim() == 2);

    Subspace full;
    full.ambient_dim = 2;
    full.basis = {{1, 0}, {0, 1}};
    CHECK(orth_complement(f, full).dim() == 0);
}

TEST_CASE("orth_complement is an inclusion-reversing involution") {
    for (FieldParams params : {FieldParams{2, 2, 1, 2}, FieldParams{2, 4, 2, 2},
                               FieldParams{2, 4, 1, 4}, FieldParams{3, 2, 1, 2},
                               FieldParams{2, 6, 2, 3}, FieldParams{5, 2, 1, 2}}) {
        FieldContext f(params);
        const std::uint32_t mu = f.subfield_degree();
        SubspaceLattice lat(Fq::subfield(f), mu);
        std::vector<std::size_t> perp_idx(lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i) {
            const Subspace pv = orth_complement(f, lat[i]);
            CHECK(pv.dim() + lat[i].dim() == mu);
            CHECK(orth_complement(f, pv) == lat[i]);
            perp_idx[i] = lat.index_of_span(pv.basis);
            // oracle agreement on every subspace
            CHECK(span_members(f, pv) == orth_members_oracle(f, lat[i]));
        }
        for (std::size_t i = 0; i < lat.size(); ++i)
            for (std::size_t j = 0; j < lat.size(); ++j)
                if (lat.contains(j, i))  // i inside j
                    CHECK(lat.contains(perp_idx[i], perp_idx[j]));
    }
}

TEST_CASE("subspace lattice membership bitmaps agree with span enumeration") {
    const auto lat = enumerate_subspaces(3, 2);
    // the whole lattice partitions: every vector is in the full space
    const std::size_t full = lat.size() - 1;
    for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.contains(full, i));
    // {0} is inside everything
    for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.contains(i, 0));
}
