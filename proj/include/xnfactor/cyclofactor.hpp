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

#ifndef XNFACTOR_CYCLOFACTOR_HPP
#define XNFACTOR_CYCLOFACTOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "xnfactor/gfield.hpp"
#include "xnfactor/polyring.hpp"

namespace xnfactor::cyclo {

using numutil::u64;

// Case 1: rad(n) | q-1 and (q != 3 mod 4 or 8 does not divide n); every
//         irreducible factor of x^n - 1 is a binomial x^t - a.
// Case 2: rad(n) | q-1, q = 3 mod 4 and 8 | n; factors are binomials or
//         trinomials x^{2t} - b x^t + c.
enum class Case { Case1, Case2, Unsupported };

struct CaseTag {
    Case kind = Case::Unsupported;
    /// Failing hypothesis; empty unless kind == Unsupported.
    std::string reason;
};

/// Raised when an operation is called outside the hypotheses it needs.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Shape { Binomial, Trinomial };

const char* to_string(Shape s);

/// One irreducible factor. Binomial: x^t - a. Trinomial: x^{2t} - b x^t + c.
struct FactorRecord {
    Shape shape = Shape::Binomial;
    u64 t = 1;
    u64 a = 0;
    u64 b = 0;
    u64 c = 0;
    /// Set on a conjugate-pair product whose middle coefficient vanished; the
    /// record then holds the binomial x^t - a with t twice the pair's block.
    bool degenerate_from_trinomial = false;

    static FactorRecord binomial(u64 t, u64 a) { return {Shape::Binomial, t, a, 0, 0, false}; }
    static FactorRecord trinomial(u64 t, u64 b, u64 c) { return {Shape::Trinomial, t, 0, b, c, false}; }

    u64 degree() const { return shape == Shape::Binomial ? t : 2 * t; }
    poly::DensePoly to_poly(u64 q) const;
    /// Nonzero coefficients as (power, residue), ascending in power.
    std::vector<std::pair<u64, u64>> sparse_coeffs(u64 q) const;

    friend bool operator==(const FactorRecord&, const FactorRecord&) = default;
};

/// Same order as poly::canonical_less on the expanded polynomials.
bool canonical_less(const FactorRecord& x, const FactorRecord& y, u64 q);

struct Case1Params {
    u64 m;  // n / gcd(n, q-1)
    u64 l;  // (q-1) / gcd(n, q-1)

    friend bool operator==(const Case1Params&, const Case1Params&) = default;
};

struct Case2Params {
    u64 m;       // n / gcd(n, q^2-1)
    u64 l1;      // (q-1) / gcd(n, q-1)
    u64 l2;      // (q^2-1) / gcd(n, q^2-1)
    unsigned r;  // min(nu_2(n/2), nu_2(q+1))

    friend bool operator==(const Case2Params&, const Case2Params&) = default;
};

struct Factorization {
    gf::FieldCtx field;  // carries the theta used for labels
    std::optional<gf::Fq2Elem> alpha;
    u64 n = 0;
    Case kind = Case::Case1;
    std::variant<Case1Params, Case2Params> params;
    std::vector<FactorRecord> factors;  // canonical order

    u64 q() const { return field.q(); }
};

struct CensusKey {
    u64 degree;
    Shape shape;

    friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct FactorCensus {
    std::map<CensusKey, u64> counts;
    u64 total = 0;

    u64 sum_of_entries() const;
    friend bool operator==(const FactorCensus&, const FactorCensus&) = default;
};

/// Tally of an enumerated factor list.
FactorCensus tally(const Factorization& f);

/// Throws std::domain_error for n == 0.
CaseTag classify(const gf::FieldCtx& ctx, u64 n);

Case1Params case1_params(const gf::FieldCtx& ctx, u64 n);
Case2Params case2_params(const gf::FieldCtx& ctx, u64 n);

/// Irreducibility criterion for x^t - a. a must be nonzero.
bool binomial_is_irreducible(const gf::FieldCtx& ctx, u64 t, gf::FqElem a);

/// x^t - a | x^n - 1 iff t | n and ord(a) | gcd(q-1, n/t). a must be nonzero.
bool binomial_divides_xn1(const gf::FieldCtx& ctx, u64 t, gf::FqElem a, u64 n);

/// For q = 3 mod 4 and a non-square a: x^{4s} - a = (x^{2s} - b x^s + c)(x^{2s} + b x^s + c)
/// with c^2 = -a and b^2 = 2c. Returns the two trinomials (first with middle
/// coefficient -b). b is the smaller square root of 2c.
std::pair<FactorRecord, FactorRecord> split_reducible_binomial(const gf::FieldCtx& ctx, u64 s, gf::FqElem a);

Factorization factor_case1(const gf::FieldCtx& ctx, u64 n);
FactorCensus count_case1(const gf::FieldCtx& ctx, u64 n);

/// Exponents u in [1, gcd(n, q^2-1)] indexing the conjugate pairs of degree-t
/// binomials over F_{q^2} that are not defined over F_q.
std::vector<u64> build_Rt(const gf::QuadExtCtx& ctx2, u64 n, u64 t);

Factorization factor_case2(const gf::QuadExtCtx& ctx2, u64 n);
FactorCensus count_case2(const gf::QuadExtCtx& ctx2, u64 n);

struct Unsupported {
    u64 q = 0;
    u64 n = 0;
    std::string reason;
    /// Oracle factorization of x^n - 1, present when n is within the
    /// diagnostic bound.
    std::optional<std::vector<poly::OracleFactor>> diagnostic;
};

struct DispatchOptions {
    u64 diagnostic_bound = 512;
    u64 seed = 1;
};

using FactorOutcome = std::variant<Factorization, Unsupported>;

/// Classifies and dispatches. Throws std::domain_error unless q is a prime in
/// [3, 2^31) and 1 <= n < 2^31.
FactorOutcome factor_xn_minus_1(u64 q, u64 n, const DispatchOptions& opts = {});

struct CensusReport {
    gf::FieldCtx field;
    std::optional<gf::Fq2Elem> alpha;
    u64 n = 0;
    Case kind = Case::Case1;
    std::variant<Case1Params, Case2Params> params;
    FactorCensus census;
};

using CensusOutcome = std::variant<CensusReport, Unsupported>;

CensusOutcome count_xn_minus_1(u64 q, u64 n);

struct Verification {
    bool product_matches = false;
    std::vector<bool> irreducible;

    bool ok() const;
};

/// Multiplies the factors back together and runs Rabin's test on each one,
/// spreading the irreducibility checks over jobs threads.
Verification verify(const Factorization& f, unsigned jobs = 1);

}  // namespace xnfactor::cyclo

#endif  // XNFACTOR_CYCLOFACTOR_HPP
