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

#ifndef QLIN_FIELD_HPP
#define QLIN_FIELD_HPP

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlin {

/// Field element of GF(p^m) in packed polynomial-basis representation:
/// the value sum_i c_i * p^i encodes the coefficient vector (c_0,...,c_{m-1})
/// over Z/p. For p = 2 this is plain bit packing and addition is XOR.
using Elem = std::uint32_t;

struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BudgetError : std::runtime_error {
    std::uint64_t required;
    BudgetError(const std::string& msg, std::uint64_t required_count)
        : std::runtime_error(msg), required(required_count) {}
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// ipow without overflow checking; caller guarantees the result fits.
std::uint64_t ipow_u64(std::uint64_t base, std::uint32_t exp);

/// (p, m, d, k) with e = gcd(m, d). Constraint: 1 <= k <= m/e.
struct FieldParams {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::uint32_t d = 1;
    std::uint32_t k = 1;

    std::uint32_t e() const { return static_cast<std::uint32_t>(gcd_u64(m, d)); }
    std::uint32_t subfield_degree() const { return m / e(); }  // m/e
    std::uint64_t field_size() const { return ipow_u64(p, m); }

    /// Throws ParamError with a human-readable diagnostic on violation.
    void validate(std::uint64_t size_cap = kDefaultSizeCap) const;

    static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t{1} << 24;

    bool operator==(const FieldParams&) const = default;
};

/// Monic degree-m polynomial over Z/p, coefficients low-degree-first,
/// length m+1, leading coefficient 1. This is also the wire format.
using PolyCoeffs = std::vector<std::uint32_t>;

/// Smallest monic primitive polynomial of degree m over Z/p, where
/// candidates are ordered by their packed coefficient value (constant term
/// least significant). Deterministic.
PolyCoeffs find_primitive_poly(std::uint32_t p, std::uint32_t m,
                               std::uint64_t size_cap = FieldParams::kDefaultSizeCap);

/// A fully built GF(p^m): modulus, primitive element pi = class of x,
/// exp/log tables, and the subfield F_{p^e} with its basis machinery.
/// Immutable after construction; safe to share across threads.
class FieldContext {
   public:
    explicit FieldContext(const FieldParams& params,
                          std::optional<PolyCoeffs> modulus_override = std::nullopt,
                          std::uint64_t size_cap = FieldParams::kDefaultSizeCap);

    const FieldParams& params() const { return params_; }
    std::uint32_t p() const { return params_.p; }
    std::uint32_t m() const { return params_.m; }
    std::uint32_t d() const { return params_.d; }
    std::uint32_t k() const { return params_.k; }
    std::uint32_t e() const { return e_; }
    std::uint32_t subfield_degree() const { return mu_; }     // m/e
    std::uint64_t size() const { return q_; }                 // p^m
    std::uint64_t subfield_size() const { return sub_q_; }    // p^e
    const PolyCoeffs& modulus() const { return modulus_; }
    Elem pi() const { return pi_; }

    // --- element arithmetic -------------------------------------------------

    Elem add(Elem a, Elem b) const {
        if (params_.p == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const {
        if (params_.p == 2) return a;
        return neg_[a];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (s >= qm1_) s -= qm1_;
        return exp_[s];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("inv(0) is undefined");
        return exp_[(qm1_ - log_[a]) % qm1_];
    }
    /// x^n (n is an ordinary exponent, not a Frobenius power).
    Elem pow(Elem x, std::uint64_t n) const {
        if (x == 0) return n == 0 ? 1u : 0u;
        std::uint64_t r = (static_cast<std::uint64_t>(log_[x]) * (n % qm1_)) % qm1_;
        return exp_[r];
    }
    /// x^(p^t), the t-th Frobenius power.
    Elem frobenius(Elem x, std::uint32_t t) const {
        if (x == 0) return 0;
        std::uint64_t mult = frob_multiplier(t);
        return exp_[(static_cast<std::uint64_t>(log_[x]) * mult) % qm1_];
    }
    /// p^t mod (p^m - 1).
    std::uint64_t frob_multiplier(std::uint32_t t) const;

    Elem exp(std::uint64_t i) const { return exp_[i % qm1_]; }  // pi^i
    std::uint32_t log(Elem x) const {
        if (x == 0) throw DomainError("log(0) is undefined");
        return log_[x];
    }

    const std::uint32_t* exp_table() const { return exp_.data(); }
    const std::uint32_t* log_table() const { return log_.data(); }

    // --- digit view ---------------------------------------------------------

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint32_t>& c) const;

    // --- subfield F_{p^e} = fixed field of the e-th Frobenius power ----------

    /// The p^e subfield elements, ascending by packed value. First is 0.
    const std::vector<Elem>& subfield_elements() const { return sub_elems_; }
    /// A generator of the subfield's multiplicative group (1 when p^e = 2).
    Elem subfield_generator() const { return sub_gen_; }
    bool in_subfield(Elem a) const { return frobenius(a, e_) == a; }
    /// Position of a subfield element in subfield_elements().
    std::uint32_t subfield_index(Elem a) const;

    /// Coordinates of x in the basis (1, pi, ..., pi^{m/e-1}) over F_{p^e};
    /// entries are subfield elements in big-field representation.
    std::vector<Elem> coords_over_subfield(Elem x) const;
    Elem from_coords(const std::vector<Elem>& coords) const;

    /// Relative trace onto the subfield: sum of x^(p^(e*i)), i = 0..m/e-1.
    Elem trace_to_subfield(Elem x) const;

   private:
    Elem add_slow(Elem a, Elem b) const;
    void build_tables();
    void build_subfield();
    void build_coords();

    FieldParams params_;
    std::uint32_t e_ = 1, mu_ = 1;
    std::uint64_t q_ = 2, qm1_ = 1, sub_q_ = 2;
    PolyCoeffs modulus_;
    Elem pi_ = 1;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<Elem> add_table_;  // only for odd p with q small enough
    std::vector<Elem> neg_;        // only for odd p
    std::vector<Elem> sub_elems_;
    Elem sub_gen_ = 1;
    std::vector<std::uint32_t> pw_;           // p^i, i = 0..m
    std::vector<std::uint8_t> coord_inv_;     // m x m inverse basis matrix over Z/p
    std::vector<Elem> sub_gen_pows_;          // sigma^j, j = 0..e-1
};

}  // namespace qlin

#endif  // QLIN_FIELD_HPP
