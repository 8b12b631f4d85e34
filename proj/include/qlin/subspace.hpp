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

#ifndef QLIN_SUBSPACE_HPP
#define QLIN_SUBSPACE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qlin/linalg.hpp"
#include "qlin/qbinom.hpp"

namespace qlin {

/// A field with q elements realized inside a FieldContext: either the whole
/// field, or the embedded subfield F_{p^e}. All arithmetic delegates to the
/// context; the element list fixes a canonical enumeration order.
struct Fq {
    std::shared_ptr<const FieldContext> owned;  // set when built standalone
    const FieldContext* ctx = nullptr;
    std::uint64_t order = 0;
    std::vector<Elem> elems;  // ascending; elems[0] == 0

    static Fq whole(const FieldContext& c);
    static Fq subfield(const FieldContext& c);
    /// Builds GF(q) internally; q must be a prime power.
    static Fq standalone(std::uint64_t q);

    std::uint32_t index_of(Elem a) const;
};

/// F_q-subspace of F_q^n given by its RREF-canonical basis. Two subspaces
/// are equal iff their canonical bases are identical.
struct Subspace {
    std::uint32_t ambient_dim = 0;
    std::vector<std::vector<Elem>> basis;  // RREF rows, possibly empty

    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }
    bool operator==(const Subspace&) const = default;
};

/// Every subspace of F_q^n exactly once, canonical, sorted by
/// (dimension, flattened basis lexicographic), with membership bitmaps for
/// fast containment tests. Hard cap q^n <= 2^12.
class SubspaceLattice {
   public:
    static constexpr std::uint64_t kVectorCap = std::uint64_t{1} << 12;

    SubspaceLattice(Fq field, std::uint32_t ambient_dim);

    const Fq& field() const { return field_; }
    std::uint32_t ambient_dim() const { return n_; }
    std::size_t size() const { return spaces_.size(); }
    const Subspace& operator[](std::size_t i) const { return spaces_[i]; }
    const std::vector<Subspace>& spaces() const { return spaces_; }

    /// True iff spaces()[inner] is contained in spaces()[outer].
    bool contains(std::size_t outer, std::size_t inner) const;

    /// Index of a subspace given by any spanning set (canonicalized first).
    std::size_t index_of_span(const std::vector<std::vector<Elem>>& vectors) const;

    /// Packs a vector over F_q into its enumeration index (base-q digits).
    std::uint64_t pack_vector(const std::vector<Elem>& v) const;

    /// All member vectors of spaces()[i], by packed index.
    const std::vector<std::uint64_t>& member_bitmap(std::size_t i) const { return members_[i]; }

   private:
    Fq field_;
    std::uint32_t n_;
    std::uint64_t vec_count_;
    std::vector<Subspace> spaces_;
    std::vector<std::vector<std::uint64_t>> members_;  // bitmaps over packed vectors
};

/// Convenience: lattice of F_q^n with q a prime power, building the field
/// context internally. Throws BudgetError when q^n exceeds the cap,
/// ParamError when q is not a prime power.
SubspaceLattice enumerate_subspaces(std::uint64_t q, std::uint32_t n);

/// Checks sum_{V subseteq U} mu_q(V) = [U == 0] on every U of the lattice.
bool moebius_delta_check(const SubspaceLattice& lat);

/// Round-trips an arbitrary integer table through the Möbius transform in
/// both directions: g(U) = sum_{V<=U} f(V), then f must be recovered by
/// f(U) = sum_{V<=U} mu(dim U - dim V) g(V), and symmetrically.
bool inversion_check(const SubspaceLattice& lat, const std::vector<BigInt>& f);

/// A bilinear pairing on the subfield-coordinate space (F_{p^e})^{m/e}.
using Pairing = std::function<Elem(const std::vector<Elem>&, const std::vector<Elem>&)>;

/// The trace form <u,v> = Tr_{F_p^m / F_p^e}(x_u * x_v) on subfield
/// coordinates; the canonical nondegenerate pairing.
Pairing trace_pairing(const FieldContext& ctx);

/// Pairing <u,v> = u^T G v over the subfield, for swapping in alternative
/// nondegenerate Gram matrices in invariance tests.
Pairing gram_pairing(const FieldContext& ctx, const FieldMatrix& gram);

/// Orthogonal complement of a subspace of (F_{p^e})^{m/e} under the given
/// pairing (trace form by default). dim V + dim V^perp = m/e.
Subspace orth_complement(const FieldContext& ctx, const Subspace& v,
                         const Pairing* pairing = nullptr);

}  // namespace qlin

#endif  // QLIN_SUBSPACE_HPP
