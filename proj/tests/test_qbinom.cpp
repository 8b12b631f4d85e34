#include <doctest.h>

#include <map>

#include "qlin/field.hpp"
#include "qlin/qbinom.hpp"

using namespace qlin;

namespace {

// independent oracle: the q-Pascal recurrence
// binom(n,i)_q = binom(n-1,i-1)_q + q^i binom(n-1,i)_q
BigInt pascal_binom(std::uint64_t n, std::uint64_t i, std::uint64_t q) {
    static std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, BigInt> memo;
    if (i > n) return 0;
    if (i == 0) return 1;
    const auto key = std::make_tuple(n, i, q);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const BigInt v = pascal_binom(n - 1, i - 1, q) + big_pow(BigInt(q), i) * pascal_binom(n - 1, i, q);
    memo.emplace(key, v);
    return v;
}

}  // namespace

TEST_CASE("gaussian_binom examples and oracle") {
    CHECK(gaussian_binom(0, 0, 2) == 1);
    CHECK(gaussian_binom(7, 0, 3) == 1);
    CHECK(gaussian_binom(2, 1, 2) == 3);
    CHECK(gaussian_binom(4, 2, 2) == 35);
    CHECK(gaussian_binom(3, 5, 2) == 0);  // i > n
    CHECK_THROWS_AS(gaussian_binom(3, 1, 1), ParamError);

    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (std::uint64_t n = 0; n <= 12; ++n)
            for (std::uint64_t i = 0; i <= n; ++i) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(i);
                CHECK(gaussian_binom(n, i, q) == pascal_binom(n, i, q));
            }
}

TEST_CASE("gaussian_binom symmetry") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (std::uint64_t n = 0; n <= 12; ++n)
            for (std::uint64_t i = 0; i <= n; ++i)
                CHECK(gaussian_binom(n, i, q) == gaussian_binom(n, n - i, q));
}

TEST_CASE("moebius_mu closed form") {
    CHECK(moebius_mu(0, 2) == 1);
    CHECK(moebius_mu(1, 2) == -1);
    CHECK(moebius_mu(1, 9) == -1);
    CHECK(moebius_mu(2, 2) == 2);
    CHECK(moebius_mu(3, 2) == -8);
    CHECK(moebius_mu(2, 3) == 3);
    CHECK(moebius_mu(4, 3) == big_pow(BigInt(3), 6));
}

TEST_CASE("product_formula_coeffs") {
    CHECK(product_formula_coeffs(0, 2) == std::vector<BigInt>{1});
    CHECK(product_formula_coeffs(2, 2) == std::vector<BigInt>{1, 3, 2});
    CHECK(product_formula_coeffs(3, 2) == std::vector<BigInt>{1, 7, 14, 8});

    // coefficient i must equal q^(i(i-1)/2) binom(n,i)_q
    for (std::uint64_t q : {2, 3, 5, 9})
        for (std::uint64_t n = 0; n <= 12; ++n) {
            const auto coeffs = product_formula_coeffs(n, q);
            REQUIRE(coeffs.size() == n + 1);
            for (std::uint64_t i = 0; i <= n; ++i)
                CHECK(coeffs[i] == big_pow(BigInt(q), i * (i ? i - 1 : 0) / 2) *
                                       gaussian_binom(n, i, q));
        }
}

TEST_CASE("verify_conjecture spot values") {
    for (std::uint64_t q : {2, 3, 5})
        for (std::uint64_t u = 0; u <= 4; ++u) {
            const auto c = verify_conjecture(q, u, 0);
            CHECK(c.holds);
            CHECK(c.lhs == 1);
            CHECK(c.rhs == 1);
        }
    const auto a = verify_conjecture(2, 2, 1);
    CHECK(a.holds);
    CHECK(a.lhs == 15);
    CHECK(a.rhs == 15);
    const auto b = verify_conjecture(2, 2, 2);
    CHECK(b.holds);
    CHECK(b.lhs == 15);
    CHECK(b.rhs == 15);
    // i > u: both sides vanish
    const auto v = verify_conjecture(3, 2, 5);
    CHECK(v.holds);
    CHECK(v.lhs == 0);
}

TEST_CASE("conjecture sweep on the default grid") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (std::uint64_t u = 0; u <= 8; ++u)
            for (std::uint64_t i = 0; i <= u; ++i) {
                CAPTURE(q);
                CAPTURE(u);
                CAPTURE(i);
                CHECK(verify_conjecture(q, u, i).holds);
            }
}
