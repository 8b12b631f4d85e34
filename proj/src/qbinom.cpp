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

#include "qlin/qbinom.hpp"

#include <cassert>

#include "qlin/field.hpp"

namespace qlin {

BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigInt gaussian_binom(std::uint64_t n, std::uint64_t i, std::uint64_t q) {
    if (q < 2) throw ParamError("gaussian_binom requires q >= 2");
    if (i > n) return 0;
    if (2 * i > n) i = n - i;  // symmetry keeps the loop short
    const BigInt bq = q;
    BigInt acc = 1;
    for (std::uint64_t j = 1; j <= i; ++j) {
        acc *= big_pow(bq, n - i + j) - 1;
        const BigInt den = big_pow(bq, j) - 1;
        BigInt quo, rem;
        boost::multiprecision::divide_qr(acc, den, quo, rem);
        assert(rem == 0);
        acc = quo;
    }
    return acc;
}

BigInt moebius_mu(std::uint64_t dim, std::uint64_t q) {
    BigInt v = big_pow(BigInt(q), dim * (dim - (dim ? 1 : 0)) / 2);
    return (dim % 2 == 0) ? v : -v;
}

std::vector<BigInt> product_formula_coeffs(std::uint64_t n, std::uint64_t q) {
    std::vector<BigInt> poly{1};
    BigInt qi = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(poly.size() + 1, 0);
        for (std::size_t t = 0; t < poly.size(); ++t) {
            next[t] += poly[t];
            next[t + 1] += poly[t] * qi;
        }
        poly = std::move(next);
        qi *= q;
    }
    return poly;
}

ConjectureCase verify_conjecture(std::uint64_t q, std::uint64_t u, std::uint64_t i) {
    ConjectureCase out;
    if (i > u) {  // both sides vanish
        out.lhs = 0;
        out.rhs = 0;
        out.holds = true;
        return out;
    }
    const std::uint64_t q2 = q * q;
    BigInt sum = 0;
    BigInt qj = 1;
    for (std::uint64_t j = 0; j <= i; ++j) {
        sum += qj * gaussian_binom(i, j, q2);
        qj *= q;
    }
    out.lhs = gaussian_binom(u, i, q2) * sum;

    BigInt prod = 1;
    for (std::uint64_t j = 0; j < i; ++j) prod *= 1 + big_pow(BigInt(q), u - j);
    out.rhs = gaussian_binom(u, i, q) * prod;

    out.holds = out.lhs == out.rhs;
    return out;
}

}  // namespace qlin
