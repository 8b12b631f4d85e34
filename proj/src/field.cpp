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

#include "qlin/field.hpp"

#include <algorithm>
#include <numeric>

namespace qlin {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t ipow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

void FieldParams::validate(std::uint64_t size_cap) const {
    if (!is_prime(p)) throw ParamError("p must be prime (got p=" + std::to_string(p) + ")");
    if (m < 1) throw ParamError("m must be >= 1");
    if (d < 1) throw ParamError("d must be >= 1");
    if (k < 1) throw ParamError("k must be >= 1");
    const std::uint32_t mu = m / e();
    if (k > mu)
        throw ParamError("k exceeds m/e = " + std::to_string(mu) + " (k=" + std::to_string(k) +
                         ", e=" + std::to_string(e()) + ")");
    // overflow-safe size check against the table-construction cap
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > size_cap)
            throw ParamError("field size p^m exceeds the enumeration cap " +
                             std::to_string(size_cap));
    }
}

namespace {

// Multiplication by x modulo a monic modulus, on packed elements.
// Specialized for p = 2 (shift/xor); digit arithmetic otherwise.
struct MulxCtx {
    std::uint32_t p, m;
    std::uint64_t q;
    Elem packed_modulus_tail;          // p = 2: bits of modulus below degree m
    std::vector<std::uint32_t> pw;     // p^i
    const PolyCoeffs* modulus;

    Elem mulx(Elem v) const {
        if (p == 2) {
            v <<= 1;
            if (v & (1u << m)) v = (v ^ (1u << m)) ^ packed_modulus_tail;
            return v;
        }
        // digits: shift up, then reduce the overflow digit against the modulus
        std::uint32_t lead = v / pw[m - 1];
        Elem shifted = (v % pw[m - 1]) * p;
        if (lead == 0) return shifted;
        // subtract lead * (modulus - x^m) from shifted
        Elem r = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t dig = (shifted / pw[i]) % p;
            std::uint32_t sub = (lead * (*modulus)[i]) % p;
            r += ((dig + p - sub) % p) * pw[i];
        }
        return r;
    }
};

MulxCtx make_mulx(std::uint32_t p, std::uint32_t m, const PolyCoeffs& modulus) {
    MulxCtx c;
    c.p = p;
    c.m = m;
    c.q = ipow_u64(p, m);
    c.modulus = &modulus;
    c.pw.resize(m + 1);
    c.pw[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) c.pw[i] = c.pw[i - 1] * p;
    c.packed_modulus_tail = 0;
    if (p == 2) {
        for (std::uint32_t i = 0; i < m; ++i)
            if (modulus[i]) c.packed_modulus_tail |= 1u << i;
    }
    return c;
}

// pi = class of x reduced mod the modulus (relevant for m = 1).
Elem pi_of(std::uint32_t p, std::uint32_t m, const PolyCoeffs& modulus) {
    if (m > 1) return p;
    return (p - modulus[0] % p) % p;
}

// The class of x has multiplicative order exactly q-1 iff the modulus is
// primitive. Walks the full orbit; rejects early on a premature return to 1.
bool x_has_full_order(const MulxCtx& c, const PolyCoeffs& modulus) {
    const std::uint64_t qm1 = c.q - 1;
    Elem y = pi_of(c.p, c.m, modulus);
    if (c.m == 1) {
        if (y == 0) return false;
        Elem acc = y;
        for (std::uint64_t i = 1; i < qm1; ++i) {
            if (acc == 1) return false;
            acc = static_cast<Elem>((static_cast<std::uint64_t>(acc) * y) % c.p);
        }
        return acc == 1;
    }
    Elem acc = 1;
    for (std::uint64_t i = 1; i < qm1; ++i) {
        acc = c.mulx(acc);
        if (acc == 1) return false;
    }
    return c.mulx(acc) == 1;
}

}  // namespace

PolyCoeffs find_primitive_poly(std::uint32_t p, std::uint32_t m, std::uint64_t size_cap) {
    if (!is_prime(p)) throw ParamError("p must be prime (got p=" + std::to_string(p) + ")");
    if (m < 1) throw ParamError("m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > size_cap)
            throw ParamError("field size p^m exceeds the enumeration cap " + std::to_string(size_cap));
    }
    // candidates ordered by packed coefficient value, constant term least
    // significant; the first primitive one is the canonical choice
    PolyCoeffs cand(m + 1, 0);
    cand[m] = 1;
    for (std::uint64_t v = 0; v < q; ++v) {
        std::uint64_t t = v;
        for (std::uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        MulxCtx c = make_mulx(p, m, cand);
        if (x_has_full_order(c, cand)) return cand;
    }
    throw InternalError("no primitive polynomial found; unreachable for valid inputs");
}

FieldContext::FieldContext(const FieldParams& params, std::optional<PolyCoeffs> modulus_override,
                           std::uint64_t size_cap)
    : params_(params) {
    params_.validate(size_cap);
    e_ = params_.e();
    mu_ = params_.m / e_;
    q_ = ipow_u64(params_.p, params_.m);
    qm1_ = q_ - 1;
    sub_q_ = ipow_u64(params_.p, e_);
    pw_.resize(params_.m + 1);
    pw_[0] = 1;
    for (std::uint32_t i = 1; i <= params_.m; ++i) pw_[i] = pw_[i - 1] * params_.p;

    if (modulus_override) {
        const PolyCoeffs& ov = *modulus_override;
        if (ov.size() != params_.m + 1 || ov[params_.m] != 1)
            throw ParamError("modulus override must be monic of degree m");
        for (std::uint32_t c : ov)
            if (c >= params_.p) throw ParamError("modulus override has a coefficient >= p");
        MulxCtx c = make_mulx(params_.p, params_.m, ov);
        if (!x_has_full_order(c, ov))
            throw ParamError("modulus override is not primitive: the class of x does not "
                             "generate the multiplicative group");
        modulus_ = ov;
    } else {
        modulus_ = find_primitive_poly(params_.p, params_.m, size_cap);
    }
    pi_ = pi_of(params_.p, params_.m, modulus_);

    build_tables();
    build_subfield();
    build_coords();
}

void FieldContext::build_tables() {
    exp_.assign(qm1_, 0);
    log_.assign(q_, 0);  // log_[0] is a sentinel, never read through log()
    MulxCtx c = make_mulx(params_.p, params_.m, modulus_);
    Elem y = 1;
    for (std::uint64_t i = 0; i < qm1_; ++i) {
        exp_[i] = y;
        log_[y] = static_cast<std::uint32_t>(i);
        y = params_.m == 1 ? static_cast<Elem>((static_cast<std::uint64_t>(y) * pi_) % params_.p)
                           : c.mulx(y);
    }
    if (y != 1) throw InternalError("exp table did not close: modulus not primitive");

    if (params_.p != 2) {
        neg_.resize(q_);
        for (std::uint64_t v = 0; v < q_; ++v) {
            Elem r = 0;
            for (std::uint32_t i = 0; i < params_.m; ++i) {
                std::uint32_t dig = (static_cast<std::uint32_t>(v) / pw_[i]) % params_.p;
                r += ((params_.p - dig) % params_.p) * pw_[i];
            }
            neg_[v] = r;
        }
        if (q_ <= 1024) {
            add_table_.resize(q_ * q_);
            for (std::uint64_t a = 0; a < q_; ++a)
                for (std::uint64_t b = 0; b < q_; ++b)
                    add_table_[a * q_ + b] = add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }
}

Elem FieldContext::add_slow(Elem a, Elem b) const {
    Elem r = 0;
    for (std::uint32_t i = 0; i < params_.m; ++i) {
        std::uint32_t da = (a / pw_[i]) % params_.p;
        std::uint32_t db = (b / pw_[i]) % params_.p;
        r += ((da + db) % params_.p) * pw_[i];
    }
    return r;
}

std::uint64_t FieldContext::frob_multiplier(std::uint32_t t) const {
    t %= params_.m;  // x^(p^m) = x
    std::uint64_t mult = 1;
    for (std::uint32_t i = 0; i < t; ++i) mult = (mult * params_.p) % qm1_;
    if (qm1_ == 1) return 0;
    return mult;
}

std::vector<std::uint32_t> FieldContext::digits(Elem a) const {
    std::vector<std::uint32_t> c(params_.m);
    for (std::uint32_t i = 0; i < params_.m; ++i) c[i] = (a / pw_[i]) % params_.p;
    return c;
}

Elem FieldContext::from_digits(const std::vector<std::uint32_t>& c) const {
    assert(c.size() == params_.m);
    Elem r = 0;
    for (std::uint32_t i = 0; i < params_.m; ++i) {
        assert(c[i] < params_.p);
        r += c[i] * pw_[i];
    }
    return r;
}

void FieldContext::build_subfield() {
    sub_elems_.clear();
    sub_elems_.push_back(0);
    if (sub_q_ == q_) {
        for (std::uint64_t i = 0; i < qm1_; ++i) sub_elems_.push_back(exp_[i]);
        sub_gen_ = pi_;
    } else {
        const std::uint64_t step = qm1_ / (sub_q_ - 1);
        sub_gen_ = sub_q_ == 2 ? 1u : exp_[step];
        for (std::uint64_t i = 0; i < sub_q_ - 1; ++i) sub_elems_.push_back(exp_[i * step]);
    }
    std::sort(sub_elems_.begin(), sub_elems_.end());
    sub_gen_pows_.resize(e_);
    Elem g = 1;
    for (std::uint32_t j = 0; j < e_; ++j) {
        sub_gen_pows_[j] = g;
        g = mul(g, sub_gen_);
    }
}

std::uint32_t FieldContext::subfield_index(Elem a) const {
    auto it = std::lower_bound(sub_elems_.begin(), sub_elems_.end(), a);
    if (it == sub_elems_.end() || *it != a)
        throw DomainError("element is not in the subfield");
    return static_cast<std::uint32_t>(it - sub_elems_.begin());
}

namespace {

// Inverts an n x n matrix over Z/p by Gauss-Jordan; entries row-major.
std::vector<std::uint8_t> invert_mod_p(std::vector<std::uint32_t> a, std::uint32_t n,
                                       std::uint32_t p) {
    std::vector<std::uint32_t> inv(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) inv[i * n + i] = 1;
    auto inv_mod = [p](std::uint32_t x) {
        for (std::uint32_t y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw InternalError("not invertible mod p");
    };
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < n && row < n; ++col) {
        std::uint32_t piv = row;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) throw InternalError("basis matrix is singular");
        if (piv != row) {
            for (std::uint32_t j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[row * n + j]);
                std::swap(inv[piv * n + j], inv[row * n + j]);
            }
        }
        std::uint32_t s = inv_mod(a[row * n + col]);
        for (std::uint32_t j = 0; j < n; ++j) {
            a[row * n + j] = a[row * n + j] * s % p;
            inv[row * n + j] = inv[row * n + j] * s % p;
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (r == row || a[r * n + col] == 0) continue;
            std::uint32_t f = a[r * n + col];
            for (std::uint32_t j = 0; j < n; ++j) {
                a[r * n + j] = (a[r * n + j] + (p - f) * a[row * n + j]) % p;
                inv[r * n + j] = (inv[r * n + j] + (p - f) * inv[row * n + j]) % p;
            }
        }
        ++row;
    }
    std::vector<std::uint8_t> out(n * n);
    for (std::uint32_t i = 0; i < n * n; ++i) out[i] = static_cast<std::uint8_t>(inv[i]);
    return out;
}

}  // namespace

void FieldContext::build_coords() {
    // Z/p-basis {pi^i * sigma^j : i < m/e, j < e} refining the F_{p^e}-basis
    // (1, pi, ..., pi^{m/e-1}); column (i*e + j) holds the digits of pi^i*sigma^j.
    const std::uint32_t n = params_.m;
    std::vector<std::uint32_t> mat(n * n);
    for (std::uint32_t i = 0; i < mu_; ++i) {
        Elem pi_i = pow(pi_, i);
        for (std::uint32_t j = 0; j < e_; ++j) {
            Elem b = mul(pi_i, sub_gen_pows_[j]);
            auto dig = digits(b);
            for (std::uint32_t r = 0; r < n; ++r) mat[r * n + (i * e_ + j)] = dig[r];
        }
    }
    coord_inv_ = invert_mod_p(std::move(mat), n, params_.p);
}

std::vector<Elem> FieldContext::coords_over_subfield(Elem x) const {
    const std::uint32_t n = params_.m;
    auto dig = digits(x);
    std::vector<Elem> out(mu_, 0);
    for (std::uint32_t i = 0; i < mu_; ++i) {
        Elem s = 0;
        for (std::uint32_t j = 0; j < e_; ++j) {
            std::uint32_t c = 0;
            const std::uint32_t row = i * e_ + j;
            for (std::uint32_t t = 0; t < n; ++t)
                c = (c + coord_inv_[row * n + t] * dig[t]) % params_.p;
            // prime-field scalars embed as constant polynomials, so the
            // packed value c is the field element c*1
            s = add(s, mul(static_cast<Elem>(c), sub_gen_pows_[j]));
        }
        out[i] = s;
    }
    return out;
}

Elem FieldContext::from_coords(const std::vector<Elem>& coords) const {
    assert(coords.size() == mu_);
    Elem r = 0;
    Elem pi_i = 1;
    for (std::uint32_t i = 0; i < mu_; ++i) {
        r = add(r, mul(coords[i], pi_i));
        pi_i = mul(pi_i, pi_);
    }
    return r;
}

Elem FieldContext::trace_to_subfield(Elem x) const {
    Elem s = 0;
    for (std::uint32_t i = 0; i < mu_; ++i) s = add(s, frobenius(x, e_ * i));
    assert(in_subfield(s));
    return s;
}

}  // namespace qlin
