/*
   Copyright 2026 The xnfactor Authors

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

#include "xnfactor/gfield.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace xnfactor::gf {

FqElem FieldCtx::pow(FqElem a, u64 e) const { return {numutil::pow_mod(a.value, e, q_)}; }

FqElem FieldCtx::inv(FqElem a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
    return pow(a, q_ - 2);
}

u64 FieldCtx::order(FqElem a) const {
    if (a.value == 0) throw std::domain_error("order of zero is undefined");
    u64 ord = q_ - 1;
    for (auto [p, e] : factors_) {
        for (unsigned i = 0; i < e && pow(a, ord / p).value == 1; ++i) ord /= p;
    }
    return ord;
}

bool FieldCtx::is_generator(FqElem a) const {
    if (a.value == 0) return false;
    for (auto [p, e] : factors_) {
        if (pow(a, (q_ - 1) / p).value == 1) return false;
    }
    return true;
}

bool FieldCtx::is_square(FqElem a) const {
    return a.value == 0 || pow(a, (q_ - 1) / 2).value == 1;
}

FqElem FieldCtx::sqrt(FqElem a) const {
    if (!is_square(a)) {
        throw std::domain_error(std::to_string(a.value) + " is not a square in F_" + std::to_string(q_));
    }
    if (a.value == 0) return a;
    FqElem root;
    if (q_ % 4 == 3) {
        root = pow(a, (q_ + 1) / 4);
    } else {
        u64 odd = q_ - 1;
        unsigned s = 0;
        while ((odd & 1) == 0) {
            odd >>= 1;
            ++s;
        }
        FqElem z{2};
        while (is_square(z)) z.value++;
        FqElem c = pow(z, odd);
        FqElem t = pow(a, odd);
        root = pow(a, (odd + 1) / 2);
        unsigned m = s;
        while (t.value != 1) {
            unsigned i = 0;
            for (FqElem t2 = t; t2.value != 1; t2 = mul(t2, t2)) ++i;
            FqElem b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            root = mul(root, b);
            c = mul(b, b);
            t = mul(t, c);
            m = i;
        }
    }
    return root.value <= q_ - root.value ? root : neg(root);
}

FieldCtx FieldCtx::with_generator(FqElem theta) const {
    if (theta.value >= q_ || !is_generator(theta)) {
        throw std::domain_error(std::to_string(theta.value) + " does not generate F_" +
                                std::to_string(q_) + "^*");
    }
    return FieldCtx(q_, factors_, theta.value);
}

FieldCtx make_field(u64 q, std::size_t rank) {
    if (q < 3 || q >= kMaxModulus || !numutil::is_prime(q)) {
        throw std::domain_error("modulus must be a prime in [3, 2^31): " + std::to_string(q));
    }
    FieldCtx ctx(q, numutil::factorize(q - 1), 0);
    for (u64 g = 2; g < q; ++g) {
        if (ctx.is_generator({g}) && rank-- == 0) {
            ctx.theta_ = g;
            return ctx;
        }
    }
    // q = 3 has the single generator 2 = -1; only rank 0 exists there.
    throw std::domain_error("F_" + std::to_string(q) + "^* has fewer generators than requested");
}

Fq2Elem QuadExtCtx::add(Fq2Elem a, Fq2Elem b) const {
    return {base_.add({a.re}, {b.re}).value, base_.add({a.im}, {b.im}).value};
}

Fq2Elem QuadExtCtx::sub(Fq2Elem a, Fq2Elem b) const {
    return {base_.sub({a.re}, {b.re}).value, base_.sub({a.im}, {b.im}).value};
}

Fq2Elem QuadExtCtx::mul(Fq2Elem a, Fq2Elem b) const {
    const u64 p = q();
    // (a0 + a1 i)(b0 + b1 i) = (a0 b0 - a1 b1) + (a0 b1 + a1 b0) i
    const u64 re = (a.re * b.re + (p - a.im) * b.im) % p;
    const u64 im = (a.re * b.im + a.im * b.re) % p;
    return {re, im};
}

Fq2Elem QuadExtCtx::pow(Fq2Elem a, u64 e) const {
    Fq2Elem result{1, 0};
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

u64 QuadExtCtx::order(Fq2Elem a) const {
    if (a.re == 0 && a.im == 0) throw std::domain_error("order of zero is undefined");
    u64 ord = group_order_;
    for (auto [p, e] : group_factors_) {
        for (unsigned i = 0; i < e && pow(a, ord / p) == Fq2Elem{1, 0}; ++i) ord /= p;
    }
    return ord;
}

bool QuadExtCtx::is_generator(Fq2Elem a) const {
    if (a.re == 0 && a.im == 0) return false;
    for (auto [p, e] : group_factors_) {
        if (pow(a, group_order_ / p) == Fq2Elem{1, 0}) return false;
    }
    return true;
}

Fq2Elem QuadExtCtx::frobenius(Fq2Elem a) const { return {a.re, base_.neg({a.im}).value}; }

FqElem QuadExtCtx::trace_sum(Fq2Elem a) const {
    const Fq2Elem s = add(a, frobenius(a));
    if (s.im != 0) throw std::logic_error("trace_sum left the base field");
    return {s.re};
}

FqElem QuadExtCtx::norm(Fq2Elem a) const {
    const Fq2Elem s = mul(a, frobenius(a));
    if (s.im != 0) throw std::logic_error("norm left the base field");
    return {s.re};
}

QuadExtCtx QuadExtCtx::with_generator(Fq2Elem alpha) const {
    if (alpha.re >= q() || alpha.im >= q() || !is_generator(alpha)) {
        throw std::domain_error("element does not generate F_{q^2}^*");
    }
    QuadExtCtx ext = *this;
    ext.alpha_ = alpha;
    ext.base_ = base_.with_generator(ext.norm(alpha));
    return ext;
}

QuadExtCtx make_quad_ext(const FieldCtx& base, std::size_t rank) {
    const u64 q = base.q();
    if (q % 4 != 3) {
        throw std::domain_error("x^2 + 1 is reducible over F_" + std::to_string(q) +
                                " (need q = 3 mod 4)");
    }
    QuadExtCtx ext(base, {0, 0}, numutil::factorize_product(q - 1, q + 1));
    for (u64 a0 = 0; a0 < q; ++a0) {
        for (u64 a1 = 1; a1 < q; ++a1) {
            const Fq2Elem cand{a0, a1};
            if (ext.is_generator(cand) && rank-- == 0) {
                ext.alpha_ = cand;
                ext.base_ = base.with_generator(ext.norm(cand));
                return ext;
            }
        }
    }
    throw std::domain_error("F_{q^2}^* has fewer generators than requested");
}

}  // namespace xnfactor::gf
