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

#include "qlin/linalg.hpp"

#include <algorithm>

namespace qlin {

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix t(*ctx, cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

RrefResult rref(const FieldMatrix& m) {
    RrefResult res;
    res.r = m;
    FieldMatrix& a = res.r;
    const FieldContext& f = *m.ctx;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = row;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(row, j));
        const Elem s = f.inv(a.at(row, col));
        for (std::size_t j = 0; j < a.cols; ++j) a.at(row, j) = f.mul(a.at(row, j), s);
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row) continue;
            const Elem fct = a.at(r, col);
            if (fct == 0) continue;
            for (std::size_t j = 0; j < a.cols; ++j)
                a.at(r, j) = f.sub(a.at(r, j), f.mul(fct, a.at(row, j)));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Elem>> kernel_basis(const FieldMatrix& m) {
    const RrefResult rr = rref(m);
    const FieldContext& f = *m.ctx;
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Elem>> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(m.cols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = f.neg(rr.r.at(i, free_col));
        basis.push_back(std::move(v));
    }
    // already in RREF shape up to row order; canonicalize for stable keys
    return canonical_span_basis(f, basis, m.cols);
}

std::vector<std::vector<Elem>> canonical_span_basis(const FieldContext& ctx,
                                                    const std::vector<std::vector<Elem>>& rows,
                                                    std::size_t cols) {
    FieldMatrix m(ctx, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    const RrefResult rr = rref(m);
    std::vector<std::vector<Elem>> out;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::vector<Elem> v(cols);
        for (std::size_t c = 0; c < cols; ++c) v[c] = rr.r.at(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Elem> mat_vec(const FieldMatrix& m, const std::vector<Elem>& v) {
    const FieldContext& f = *m.ctx;
    std::vector<Elem> out(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        Elem s = 0;
        for (std::size_t c = 0; c < m.cols; ++c) s = f.add(s, f.mul(m.at(r, c), v[c]));
        out[r] = s;
    }
    return out;
}

}  // namespace qlin
