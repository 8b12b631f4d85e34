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

#ifndef QLIN_LINALG_HPP
#define QLIN_LINALG_HPP

#include <cstddef>
#include <vector>

#include "qlin/field.hpp"

namespace qlin {

/// Dense row-major matrix with entries interpreted in a FieldContext.
/// Entries may all lie in the embedded subfield, in which case elimination
/// stays inside the subfield (it is closed under the field operations).
struct FieldMatrix {
    const FieldContext* ctx = nullptr;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Elem> a;

    FieldMatrix() = default;
    FieldMatrix(const FieldContext& c, std::size_t r, std::size_t n)
        : ctx(&c), rows(r), cols(n), a(r * n, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    FieldMatrix transposed() const;
};

struct RrefResult {
    FieldMatrix r;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with deterministic pivoting: columns scanned
/// left to right, the first row with a nonzero entry becomes the pivot.
RrefResult rref(const FieldMatrix& m);

std::size_t rank(const FieldMatrix& m);

/// Basis of the right kernel {v : M v = 0}; empty when the kernel is trivial.
/// dimension = cols - rank. Rows of the returned basis are RREF-canonical.
std::vector<std::vector<Elem>> kernel_basis(const FieldMatrix& m);

/// Canonicalizes a list of row vectors: returns the RREF rows of their span
/// (nonzero rows only). The result is the unique canonical basis of the span.
std::vector<std::vector<Elem>> canonical_span_basis(const FieldContext& ctx,
                                                    const std::vector<std::vector<Elem>>& rows,
                                                    std::size_t cols);

/// M v over the matrix's context.
std::vector<Elem> mat_vec(const FieldMatrix& m, const std::vector<Elem>& v);

}  // namespace qlin

#endif  // QLIN_LINALG_HPP
