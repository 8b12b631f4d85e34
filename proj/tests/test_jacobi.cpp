#include <doctest.h>

#include <cmath>

#include "qlin/jacobi.hpp"
#include "qlin/rng.hpp"

using namespace qlin;

namespace {

// A = Q D Q^T from a deterministic product of Givens rotations: the
// eigenvalues are known exactly by construction.
std::vector<double> rotated_diagonal(const std::vector<double>& d, std::uint64_t seed,
                                     std::vector<double>& out_matrix) {
    const std::size_t n = d.size();
    out_matrix.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out_matrix[i * n + i] = d[i];
    SplitMix64 rng(seed);
    for (int rot = 0; rot < 40; ++rot) {
        const std::size_t p = rng.below(n);
        std::size_t q = rng.below(n);
        if (p == q) continue;
        const double angle = static_cast<double>(rng.below(62832)) / 10000.0;
        const double c = std::cos(angle), s = std::sin(angle);
        // A <- G^T A G with G the (p,q) rotation
        for (std::size_t i = 0; i < n; ++i) {
            const double aip = out_matrix[i * n + p], aiq = out_matrix[i * n + q];
            out_matrix[i * n + p] = c * aip - s * aiq;
            out_matrix[i * n + q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double api = out_matrix[p * n + i], aqi = out_matrix[q * n + i];
            out_matrix[p * n + i] = c * api - s * aqi;
            out_matrix[q * n + i] = s * api + c * aqi;
        }
    }
    auto sorted = d;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
}

}  // namespace

TEST_CASE("jacobi on trivial matrices") {
    CHECK(jacobi_eigenvalues({}, 0).empty());
    CHECK(jacobi_eigenvalues({0.0, 0.0, 0.0, 0.0}, 2) == std::vector<double>{0.0, 0.0});
    const auto d = jacobi_eigenvalues({3.0, 0.0, 0.0, -1.0}, 2);
    CHECK(d[0] == doctest::Approx(-1.0));
    CHECK(d[1] == doctest::Approx(3.0));
}

TEST_CASE("jacobi 2x2 hand value") {
    // [[2,1],[1,2]] has eigenvalues 1 and 3
    const auto d = jacobi_eigenvalues({2.0, 1.0, 1.0, 2.0}, 2);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("jacobi recovers a rotated diagonal") {
    for (std::size_t n : {3u, 8u, 17u}) {
        std::vector<double> diag(n);
        for (std::size_t i = 0; i < n; ++i) diag[i] = static_cast<double>(i * i) - 5.0;
        std::vector<double> a;
        const auto expect = rotated_diagonal(diag, 100 + n, a);
        const auto got = jacobi_eigenvalues(a, n);
        REQUIRE(got.size() == n);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-9));
    }
}

TEST_CASE("jacobi preserves the trace") {
    SplitMix64 rng(55);
    const std::size_t n = 20;
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = static_cast<double>(rng.below(2000)) / 100.0 - 10.0;
            a[i * n + j] = a[j * n + i] = v;
        }
    double trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += a[i * n + i];
    const auto eig = jacobi_eigenvalues(a, n);
    double sum = 0;
    for (double v : eig) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-9));
}
