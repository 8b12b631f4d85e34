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

#ifndef QLIN_CODE_HPP
#define QLIN_CODE_HPP

#include <string>
#include <vector>

#include "qlin/linearized.hpp"
#include "qlin/qbinom.hpp"
#include "qlin/subspace.hpp"

namespace qlin {

/// (f(1), f(pi), ..., f(pi^(p^m-2))): one codeword of the cyclic code.
struct Codeword {
    std::vector<Elem> values;
    std::uint64_t weight() const;
};

Codeword codeword(const LinearizedPoly& f);

/// Hamming weight of the codeword of f; computed both as the nonzero count
/// of the evaluation sequence and as p^m - |Null(f)|, which must agree.
std::uint64_t codeword_weight(const LinearizedPoly& f);

enum class WdMethod { formula, brute_force, moebius };

const char* wd_method_name(WdMethod m);

/// Exact association r -> n_r = #{a != 0 : |Null(f_a)| = p^(e r)},
/// r = 0..k-1. The zero vector (weight-0 codeword) is excluded and reported
/// separately by the serializers, so sum_r n_r = p^(mk) - 1.
struct WeightDistribution {
    FieldParams params;
    std::vector<BigInt> counts;  // index r
    WdMethod method = WdMethod::formula;

    BigInt total() const;
    /// Hamming weight of the bucket: p^m - p^(e r).
    std::uint64_t weight_of(std::uint32_t r) const;
    bool same_counts(const WeightDistribution& other) const { return counts == other.counts; }
};

/// Closed-form distribution: n_r = binom(m/e, r)_{p^e} *
/// sum_i (-1)^i p^(e i(i-1)/2) binom(m/e - r, i)_{p^e} (p^(m(k-r-i)) - 1).
/// The alternating sum runs in signed arithmetic; each n_r is checked
/// nonnegative before returning.
WeightDistribution weight_distribution_formula(const FieldParams& params);

/// Exhaustive enumeration of all a != 0, bucketed by null-space size.
/// Throws BudgetError when p^(mk) exceeds the budget. Worker partitioning
/// splits the a_0 range; the merged result is independent of workers.
WeightDistribution weight_distribution_bruteforce(const FieldContext& ctx,
                                                  std::uint64_t budget = std::uint64_t{1} << 26,
                                                  unsigned workers = 1);

/// |C_V| = #{a : Null(f_a) contains V^perp}, by the kernel dimension of the
/// Moore matrix of a basis of V^perp (counted over the big field).
BigInt c_v_count(const FieldContext& ctx, const Subspace& v, const Pairing* pairing = nullptr);

/// Möbius-inversion route over the subspace lattice of F_{p^m} viewed over
/// F_{p^e}: |S_V| = sum_{W<=V} mu(V/W)(|C_W| - 1), n_r = sum over V with
/// dim V^perp = r. Independent of the formula and brute-force paths, and of
/// the nondegenerate pairing used for perp.
WeightDistribution weight_distribution_moebius(const FieldContext& ctx,
                                               const Pairing* pairing = nullptr);

}  // namespace qlin

#endif  // QLIN_CODE_HPP
