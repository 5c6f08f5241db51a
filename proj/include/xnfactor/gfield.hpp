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

#ifndef XNFACTOR_GFIELD_HPP
#define XNFACTOR_GFIELD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>

#include "xnfactor/numutil.hpp"

namespace xnfactor::gf {

using numutil::PrimeFactorization;
using numutil::u64;

/// Largest modulus accepted by make_field (exclusive).
inline constexpr u64 kMaxModulus = u64{1} << 31;

/// Residue in [0, q). Which q is implied by the context it is used with.
struct FqElem {
    u64 value = 0;

    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// Immutable context for the prime field F_q together with a fixed generator
/// theta of its multiplicative group.
class FieldCtx {
public:
    u64 q() const { return q_; }
    const PrimeFactorization& q_minus_1_factors() const { return factors_; }
    FqElem theta() const { return {theta_}; }

    /// Reduces v modulo q.
    FqElem elem(u64 v) const { return {v % q_}; }
    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }

    FqElem add(FqElem a, FqElem b) const {
        u64 s = a.value + b.value;
        return {s >= q_ ? s - q_ : s};
    }
    FqElem sub(FqElem a, FqElem b) const {
        return {a.value >= b.value ? a.value - b.value : a.value + q_ - b.value};
    }
    FqElem neg(FqElem a) const { return {a.value == 0 ? 0 : q_ - a.value}; }
    FqElem mul(FqElem a, FqElem b) const { return {a.value * b.value % q_}; }
    FqElem pow(FqElem a, u64 e) const;
    /// Throws std::domain_error on zero.
    FqElem inv(FqElem a) const;

    /// Multiplicative order. Throws std::domain_error on zero.
    u64 order(FqElem a) const;
    bool is_generator(FqElem a) const;
    /// Euler's criterion; zero counts as a square.
    bool is_square(FqElem a) const;
    /// A square root of a square (Tonelli-Shanks), the smaller of the two.
    /// Throws std::domain_error if a is a non-square.
    FqElem sqrt(FqElem a) const;

    /// Same field, caller-supplied generator. Throws std::domain_error unless
    /// theta generates F_q^*.
    FieldCtx with_generator(FqElem theta) const;

    friend FieldCtx make_field(u64 q, std::size_t rank);

private:
    FieldCtx(u64 q, PrimeFactorization factors, u64 theta)
        : q_(q), factors_(std::move(factors)), theta_(theta) {}

    u64 q_;
    PrimeFactorization factors_;
    u64 theta_;
};

/// F_q with theta the smallest generator g >= 2 (rank 0), or the rank-th
/// generator in increasing order. Throws std::domain_error unless q is a prime
/// in [3, 2^31).
FieldCtx make_field(u64 q, std::size_t rank = 0);

/// a0 + a1*i with i^2 = -1.
struct Fq2Elem {
    u64 re = 0;
    u64 im = 0;

    friend auto operator<=>(const Fq2Elem&, const Fq2Elem&) = default;
};

/// Immutable context for F_{q^2} = F_q[i]/(i^2 + 1), valid for q = 3 mod 4.
///
/// The generator alpha is searched first; the base-field generator is then
/// defined as its norm alpha^{q+1}, which generates F_q^* because the norm map
/// is onto. base() carries that generator.
class QuadExtCtx {
public:
    const FieldCtx& base() const { return base_; }
    Fq2Elem alpha() const { return alpha_; }
    FqElem theta2() const { return base_.theta(); }
    u64 q() const { return base_.q(); }
    /// q^2 - 1.
    u64 group_order() const { return group_order_; }
    const PrimeFactorization& group_factors() const { return group_factors_; }

    Fq2Elem from_base(FqElem a) const { return {a.value, 0}; }
    Fq2Elem add(Fq2Elem a, Fq2Elem b) const;
    Fq2Elem sub(Fq2Elem a, Fq2Elem b) const;
    Fq2Elem mul(Fq2Elem a, Fq2Elem b) const;
    Fq2Elem pow(Fq2Elem a, u64 e) const;
    u64 order(Fq2Elem a) const;
    bool is_generator(Fq2Elem a) const;

    /// a^q, i.e. the conjugate a0 - a1*i.
    Fq2Elem frobenius(Fq2Elem a) const;
    /// a + a^q as a base-field element.
    FqElem trace_sum(Fq2Elem a) const;
    /// a^{q+1} as a base-field element.
    FqElem norm(Fq2Elem a) const;

    /// Same field, caller-supplied generator. Throws std::domain_error unless
    /// alpha generates F_{q^2}^*.
    QuadExtCtx with_generator(Fq2Elem alpha) const;

    friend QuadExtCtx make_quad_ext(const FieldCtx& base, std::size_t rank);

private:
    QuadExtCtx(FieldCtx base, Fq2Elem alpha, PrimeFactorization group_factors)
        : base_(std::move(base)), alpha_(alpha), group_factors_(std::move(group_factors)) {
        group_order_ = q() * q() - 1;
    }

    FieldCtx base_;
    Fq2Elem alpha_;
    PrimeFactorization group_factors_;
    u64 group_order_ = 0;
};

/// Quadratic extension of base with alpha the lexicographically smallest
/// (a0, a1), a1 != 0, of order q^2 - 1 (or the rank-th such element).
/// Throws std::domain_error unless q = 3 mod 4.
QuadExtCtx make_quad_ext(const FieldCtx& base, std::size_t rank = 0);

}  // namespace xnfactor::gf

#endif  // XNFACTOR_GFIELD_HPP
