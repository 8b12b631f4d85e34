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

#ifndef QLIN_LINEARIZED_HPP
#define QLIN_LINEARIZED_HPP

#include <functional>
#include <vector>

#include "qlin/linalg.hpp"

namespace qlin {

/// f(x) = sum_j coeffs[j] * x^(p^(j*d)), an F_{p^e}-linear map on F_{p^m}.
/// coeffs has length exactly k from the context's FieldParams.
struct LinearizedPoly {
    const FieldContext* ctx = nullptr;
    std::vector<Elem> coeffs;
};

Elem evaluate(const LinearizedPoly& f, Elem x);

struct NullSpaceResult {
    std::uint32_t r = 0;                   // dimension over F_{p^e}
    std::uint64_t size = 1;                // (p^e)^r
    std::vector<std::vector<Elem>> basis;  // RREF rows of subfield coordinates
};

/// Matrix of the map f on subfield coordinates: column i holds the
/// coordinates of f(pi^i). Square of size m/e over F_{p^e}.
FieldMatrix subfield_matrix(const LinearizedPoly& f);

/// Root space of f inside F_{p^m}, computed two ways and cross-checked:
/// exhaustive enumeration (fields up to 2^20) and the kernel of the
/// subfield-coordinate matrix. Throws InternalError if they disagree.
NullSpaceResult null_space(const LinearizedPoly& f);

/// Membership of y in Image(f), by solvability of the coordinate system.
bool image_contains(const LinearizedPoly& f, Elem y);

/// |Image(f)| = p^m / |Null(f)| (rank-nullity over F_{p^e}).
std::uint64_t image_size(const LinearizedPoly& f);

/// r x k matrix with entry (i, j) = xs[i]^(p^(j*d)).
FieldMatrix moore_matrix(const FieldContext& ctx, const std::vector<Elem>& xs, std::uint32_t k);

bool is_full_rank(const FieldMatrix& m);

/// True iff xs are linearly independent over the subfield F_{p^e}, decided
/// by the rank of their coordinate matrix.
bool subfield_independent(const FieldContext& ctx, const std::vector<Elem>& xs);

/// Per-term Frobenius permutation tables for streaming evaluation:
/// table(j)[x] = x^(p^(j*d mod m)), j = 0..k-1, over the whole field.
class FrobeniusTables {
   public:
    explicit FrobeniusTables(const FieldContext& ctx);
    const FieldContext& ctx() const { return *ctx_; }
    const Elem* table(std::uint32_t j) const { return t_[j].data(); }
    std::uint32_t terms() const { return static_cast<std::uint32_t>(t_.size()); }

   private:
    const FieldContext* ctx_;
    std::vector<std::vector<Elem>> t_;
};

/// Visits every coefficient vector a (length k) with a_0 in [lo0, hi0) and
/// the remaining coordinates sweeping the whole field, in odometer order
/// (last coordinate fastest). Maintains partial sums so each visit costs a
/// single fused pass over the field. The visitor receives the coefficient
/// vector, the full evaluation table of f_a (only when need_values, else
/// nullptr), and the number of roots.
void for_each_poly_evaluation(
    const FrobeniusTables& tabs, Elem lo0, Elem hi0, bool need_values,
    const std::function<void(const std::vector<Elem>&, const Elem*, std::uint64_t)>& visit);

/// Evaluation table of a single polynomial over the whole field plus its
/// zero count. values[x] = f(x) indexed by packed element.
std::pair<std::vector<Elem>, std::uint64_t> evaluation_table(const LinearizedPoly& f);

}  // namespace qlin

#endif  // QLIN_LINEARIZED_HPP
