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

#ifndef QLIN_QBINOM_HPP
#define QLIN_QBINOM_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qlin {

/// Exact arbitrary-precision integer. Counts are the nonnegative values;
/// Möbius signs make some intermediates negative.
using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(const BigInt& base, std::uint64_t exp);

/// Number of i-dimensional F_q-subspaces of F_q^n. q >= 2 (not required to
/// be a prime power: the value is polynomial in q and the sweep tests use
/// that). 0 when i > n. Evaluated with exact divisions, each partial
/// product being a Gaussian binomial itself.
BigInt gaussian_binom(std::uint64_t n, std::uint64_t i, std::uint64_t q);

/// Subspace-lattice Möbius function by dimension: (-1)^dim q^(dim(dim-1)/2).
BigInt moebius_mu(std::uint64_t dim, std::uint64_t q);

/// Coefficients of t^i in prod_{i=0}^{n-1} (1 + q^i t), low degree first.
/// Coefficient i equals q^(i(i-1)/2) * gaussian_binom(n, i, q).
std::vector<BigInt> product_formula_coeffs(std::uint64_t n, std::uint64_t q);

struct ConjectureCase {
    bool holds = false;
    BigInt lhs;
    BigInt rhs;
};

/// Checks binom(u,i)_{q^2} * sum_{j<=i} q^j binom(i,j)_{q^2}
///     == binom(u,i)_q * prod_{j<i} (1 + q^{u-j})   exactly.
ConjectureCase verify_conjecture(std::uint64_t q, std::uint64_t u, std::uint64_t i);

}  // namespace qlin

#endif  // QLIN_QBINOM_HPP
