#include <doctest.h>

#include <map>
#include <set>

#include "qlin/io.hpp"
#include "qlin/wenger.hpp"

using namespace qlin;

namespace {

BigInt mult_of(const SpectrumMultiset& s, int sign, std::uint32_t exp) {
    const auto it = s.entries.find(EigKey{sign, sign == 0 ? 0u : exp});
    return it == s.entries.end() ? BigInt(0) : it->second;
}

}  // namespace

TEST_CASE("graph construction counts and regularity") {
    SUBCASE("(2,2,1,1): 16 + 16 vertices, 64 edges, 4-regular") {
        FieldContext f(FieldParams{2, 2, 1, 1});
        WengerGraph g(f);
        CHECK(g.side_count() == 16);
        CHECK(g.degree() == 4);
        const auto edges = g.edges();
        CHECK(edges.size() == 64);
        std::map<std::uint64_t, int> pdeg, ldeg;
        std::set<std::pair<std::uint64_t, std::uint64_t>> uniq;
        for (auto [p, l] : edges) {
            ++pdeg[p];
            ++ldeg[l];
            uniq.insert({p, l});
        }
        CHECK(uniq.size() == 64);  // no duplicate incidences
        for (auto [v, deg] : pdeg) CHECK(deg == 4);
        for (auto [v, deg] : ldeg) CHECK(deg == 4);
        // the all-zero point and all-zero line are incident
        CHECK(uniq.count({0, 0}) == 1);
    }
    SUBCASE("(2,2,1,2): 64 per side, 256 edges") {
        FieldContext f(FieldParams{2, 2, 1, 2});
        WengerGraph g(f);
        CHECK(g.side_count() == 64);
        CHECK(g.edges().size() == 256);
    }
    SUBCASE("incidence equations hold on every emitted edge") {
        FieldContext f(FieldParams{3, 2, 1, 2});
        WengerGraph g(f);
        const std::uint64_t q = f.size();
        g.for_each_edge([&](std::uint64_t pidx, std::uint64_t lidx) {
            std::vector<Elem> p(f.k() + 1), l(f.k() + 1);
            std::uint64_t tp = pidx, tl = lidx;
            for (std::uint32_t i = 0; i <= f.k(); ++i) {
                p[i] = static_cast<Elem>(tp % q);
                tp /= q;
                l[i] = static_cast<Elem>(tl % q);
                tl /= q;
            }
            for (std::uint32_t j = 0; j < f.k(); ++j) {
                const Elem lhs = f.add(l[j + 1], p[j + 1]);
                const Elem rhs = f.mul(f.frobenius(p[0], j * f.d()), l[0]);
                CHECK(lhs == rhs);
            }
        });
    }
}

TEST_CASE("edge materialization cap") {
    FieldContext f(FieldParams{2, 6, 1, 2});  // side count 64^3 = 2^18 > 2^16
    WengerGraph g(f);
    CHECK_THROWS_AS(g.edges(), BudgetError);
}

TEST_CASE("spectrum_formula hand values") {
    SUBCASE("(2,2,1,1)") {
        const auto s = spectrum_formula(FieldParams{2, 2, 1, 1});
        CHECK(mult_of(s, +1, 4) == 1);   // +4
        CHECK(mult_of(s, -1, 4) == 1);   // -4
        CHECK(mult_of(s, +1, 2) == 12);  // +2
        CHECK(mult_of(s, -1, 2) == 12);
        CHECK(mult_of(s, 0, 0) == 6);
        CHECK(s.total_multiplicity() == 32);
    }
    SUBCASE("(2,2,1,2)") {
        const auto s = spectrum_formula(FieldParams{2, 2, 1, 2});
        CHECK(mult_of(s, +1, 4) == 1);
        CHECK(mult_of(s, +1, 2) == 24);  // +-2 from r=0
        CHECK(mult_of(s, -1, 2) == 24);
        CHECK(mult_of(s, +1, 3) == 18);  // +-sqrt(8) from r=1
        CHECK(mult_of(s, -1, 3) == 18);
        CHECK(mult_of(s, 0, 0) == 42);
        CHECK(s.total_multiplicity() == 128);
        CHECK(s.lambda_sq_mass() == 512);
    }
    SUBCASE("k = 1 zero multiplicity is 2(p^m - 1)") {
        for (FieldParams params : {FieldParams{2, 3, 1, 1}, FieldParams{3, 2, 1, 1}}) {
            const auto s = spectrum_formula(params);
            CHECK(mult_of(s, 0, 0) == BigInt(2 * (params.field_size() - 1)));
        }
    }
}

TEST_CASE("formula mass identities on a wide grid") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (std::uint32_t m = 1; m <= 6; ++m)
            for (std::uint32_t d = 1; d <= m; ++d) {
                const std::uint32_t e = static_cast<std::uint32_t>(gcd_u64(m, d));
                for (std::uint32_t k = 1; k <= m / e; ++k) {
                    // p^(m(k+2)) <= 2^40 keeps this light
                    if (static_cast<double>(m) * (k + 2) * std::log2(p) > 40) continue;
                    const FieldParams params{p, m, d, k};
                    const auto s = spectrum_formula(params);
                    CHECK(s.total_multiplicity() ==
                          2 * big_pow(BigInt(p), static_cast<std::uint64_t>(m) * (k + 1)));
                    CHECK(s.lambda_sq_mass() ==
                          2 * big_pow(BigInt(p), static_cast<std::uint64_t>(m) * (k + 2)));
                }
            }
}

TEST_CASE("counting route equals the closed form") {
    for (FieldParams params :
         {FieldParams{2, 2, 1, 1}, FieldParams{2, 2, 1, 2}, FieldParams{3, 2, 1, 2},
          FieldParams{2, 4, 2, 2}, FieldParams{2, 4, 1, 3}}) {
        CAPTURE(params.p);
        CAPTURE(params.m);
        CAPTURE(params.k);
        FieldContext f(params);
        const auto counted = spectrum_counting(f);
        const auto formula = spectrum_formula(params);
        CHECK(counted.same_entries(formula));
    }
}

TEST_CASE("counting budget is enforced") {
    FieldContext f(FieldParams{2, 4, 1, 4});
    CHECK_THROWS_AS(spectrum_counting(f, 1000), BudgetError);
}

TEST_CASE("counting worker partitioning is deterministic") {
    FieldContext f(FieldParams{3, 2, 1, 2});
    const auto w1 = spectrum_counting(f, std::uint64_t{1} << 26, 1);
    const auto w4 = spectrum_counting(f, std::uint64_t{1} << 26, 4);
    CHECK(w1.same_entries(w4));
}

TEST_CASE("dense oracle matches the exact spectrum") {
    for (FieldParams params : {FieldParams{2, 2, 1, 1}, FieldParams{2, 2, 1, 2}}) {
        FieldContext f(params);
        const auto dense = spectrum_dense(f);
        const auto exact = spectrum_formula(params).expand_sorted();
        REQUIRE(dense.size() == exact.size());
        for (std::size_t i = 0; i < dense.size(); ++i)
            CHECK(std::abs(dense[i] - exact[i]) <= 1e-6);
        // bipartite symmetry and the Perron value p^m
        CHECK(dense.back() == doctest::Approx(static_cast<double>(f.size())).epsilon(1e-9));
        for (std::size_t i = 0; i < dense.size(); ++i)
            CHECK(dense[i] == doctest::Approx(-dense[dense.size() - 1 - i]).epsilon(1e-6));
    }
}

TEST_CASE("dense oracle cap") {
    FieldContext f(FieldParams{2, 4, 1, 2});  // side 2^12 > 2^8
    CHECK_THROWS_AS(spectrum_dense(f), BudgetError);
}

TEST_CASE("reconcile report flags the zero-multiplicity erratum") {
    SUBCASE("(2,2,1,2): literal 18 vs corrected 42") {
        FieldContext f(FieldParams{2, 2, 1, 2});
        const auto rep = reconcile_report(f, true, true);
        CHECK(rep.paper_zero_expr == 18);
        CHECK(rep.corrected_zero == 42);
        CHECK(rep.erratum_flagged);
        CHECK(rep.formula_counting_agree);
        CHECK(rep.dense_within_tol);
        CHECK(rep.verdict == "consistent");
        // the counting oracle sides with the corrected value
        CHECK(mult_of(*rep.counting, 0, 0) == 42);
    }
    SUBCASE("(2,2,1,1): literal empty sum vs corrected 6") {
        FieldContext f(FieldParams{2, 2, 1, 1});
        const auto rep = reconcile_report(f, true, true);
        CHECK(rep.paper_zero_expr == 0);
        CHECK(rep.corrected_zero == 6);
        CHECK(rep.erratum_flagged);
        CHECK(mult_of(*rep.counting, 0, 0) == 6);
    }
}

TEST_CASE("spectrum serialization") {
    const auto s = spectrum_formula(FieldParams{2, 2, 1, 1});
    const auto rows = io::spectrum_json(s);
    REQUIRE(rows.size() == 5);
    // ascending by value: -4, -2, 0, +2, +4
    CHECK(rows[0]["sign"] == -1);
    CHECK(rows[0]["lambda_sq_exponent"] == 4);
    CHECK(rows[2]["sign"] == 0);
    CHECK(rows[4]["multiplicity"] == "1");
    const auto csv = io::spectrum_csv(s);
    CHECK(csv ==
          "sign,lambda_sq_exponent,multiplicity\n-1,4,1\n-1,2,12\n0,0,6\n1,2,12\n1,4,1\n");
}
