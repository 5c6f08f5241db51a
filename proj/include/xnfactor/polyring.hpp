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

#ifndef XNFACTOR_POLYRING_HPP
#define XNFACTOR_POLYRING_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xnfactor/gfield.hpp"

namespace xnfactor::poly {

using numutil::u64;

/// Dense univariate polynomial over F_q, coefficients stored low to high.
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class DensePoly {
public:
    explicit DensePoly(u64 q) : q_(q) {}
    /// Coefficients are reduced modulo q.
    DensePoly(u64 q, std::vector<u64> coeffs);

    static DensePoly constant(u64 q, u64 c) { return DensePoly(q, {c}); }
    static DensePoly monomial(u64 q, std::size_t degree, u64 c = 1);
    /// x^t - a.
    static DensePoly binomial(u64 q, std::size_t t, u64 a);
    /// x^{2t} - b x^t + c.
    static DensePoly trinomial(u64 q, std::size_t t, u64 b, u64 c);

    u64 modulus() const { return q_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    u64 leading() const { return c_.empty() ? 0 : c_.back(); }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coeffs() const { return c_; }
    std::size_t nonzero_terms() const;

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

private:
    void normalize();

    u64 q_;
    std::vector<u64> c_;
};

/// Degree first, then coefficient tuple compared from the constant term up.
bool canonical_less(const DensePoly& a, const DensePoly& b);

DensePoly add(const DensePoly& f, const DensePoly& g);
DensePoly sub(const DensePoly& f, const DensePoly& g);
DensePoly neg(const DensePoly& f);
DensePoly scale(const DensePoly& f, u64 c);
DensePoly mul(const DensePoly& f, const DensePoly& g);
/// Quotient and remainder. Throws std::domain_error on a zero divisor.
std::pair<DensePoly, DensePoly> divrem(const DensePoly& f, const DensePoly& g);
DensePoly rem(const DensePoly& f, const DensePoly& g);
/// Exact quotient; throws std::logic_error when g does not divide f.
DensePoly exact_div(const DensePoly& f, const DensePoly& g);
/// Monic gcd; gcd(0, 0) = 0.
DensePoly gcd_poly(DensePoly f, DensePoly g);
DensePoly make_monic(const DensePoly& f);
/// f^e mod h by square-and-multiply.
DensePoly powmod(const DensePoly& f, u64 e, const DensePoly& h);
u64 eval(const DensePoly& f, u64 a);
DensePoly derivative(const DensePoly& f);
/// f(x^k).
DensePoly compose_power(const DensePoly& f, std::size_t k);
/// f(-x).
DensePoly negate_variable(const DensePoly& f);

inline DensePoly operator+(const DensePoly& f, const DensePoly& g) { return add(f, g); }
inline DensePoly operator-(const DensePoly& f, const DensePoly& g) { return sub(f, g); }
inline DensePoly operator*(const DensePoly& f, const DensePoly& g) { return mul(f, g); }

/// "x^2 + 3x + 1": descending powers, least nonnegative residues, zero terms
/// omitted, unit coefficients on non-constant terms dropped.
std::string to_string(const DensePoly& f);

DensePoly xn_minus_1(u64 n, const gf::FieldCtx& ctx);

/// Phi_d over F_q. Throws std::domain_error when q divides d.
DensePoly cyclotomic_poly(u64 d, const gf::FieldCtx& ctx);

/// The F_q-linear map g -> g^q on F_q[x]/(f), stored as the matrix whose
/// i-th row is x^{iq} mod f.
class FrobeniusMap {
public:
    /// f must be monic of degree >= 1.
    explicit FrobeniusMap(const DensePoly& f);

    const DensePoly& modulus() const { return f_; }
    /// g^q mod f for g of degree < deg f.
    DensePoly apply(const DensePoly& g) const;

private:
    DensePoly f_;
    std::vector<std::vector<u64>> rows_;
};

/// Rabin's test. Throws std::domain_error unless f is monic of degree >= 1.
bool is_irreducible(const DensePoly& f);

struct OracleFactor {
    DensePoly factor;
    unsigned multiplicity;

    friend bool operator==(const OracleFactor&, const OracleFactor&) = default;
};

/// Monic square-free parts with multiplicities.
std::vector<OracleFactor> squarefree_decomposition(const DensePoly& f);

/// Square-free decomposition, distinct-degree factorization, then
/// Cantor-Zassenhaus equal-degree splitting driven by a PRNG seeded with seed.
/// Returns monic irreducible factors in canonical order whose product equals
/// f divided by its leading coefficient.
std::vector<OracleFactor> oracle_factorize(const DensePoly& f, u64 seed);

}  // namespace xnfactor::poly

#endif  // XNFACTOR_POLYRING_HPP
