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

#include "xnfactor/cyclofactor.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include <boost/rational.hpp>

namespace xnfactor::cyclo {

namespace {

using Rational = boost::rational<long long>;

u64 as_count(const Rational& r, const char* what) {
    if (r.denominator() != 1 || r.numerator() < 0) {
        throw std::logic_error(std::string("census formula is not a nonnegative integer: ") + what);
    }
    return static_cast<u64>(r.numerator());
}

Rational ratio(u64 num, u64 den) {
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

void require_case(const gf::FieldCtx& ctx, u64 n, Case want) {
    const CaseTag tag = classify(ctx, n);
    if (tag.kind == want) return;
    if (tag.kind == Case::Unsupported) throw HypothesisError(tag.reason);
    if (want == Case::Case1) {
        throw HypothesisError("q=" + std::to_string(ctx.q()) + " is 3 mod 4 and 8 divides n=" +
                              std::to_string(n) + "; binomials alone do not suffice");
    }
    throw HypothesisError("q=" + std::to_string(ctx.q()) + ", n=" + std::to_string(n) +
                          " needs q = 3 mod 4 and 8 | n for the trinomial enumeration");
}

using SparseKey = std::vector<std::pair<u64, u64>>;

// Compares as dense coefficient tuples: degree first, then from the constant
// term up.
bool key_less(const SparseKey& x, const SparseKey& y) {
    const u64 dx = x.back().first;
    const u64 dy = y.back().first;
    if (dx != dy) return dx < dy;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        const u64 px = i < x.size() ? x[i].first : ~u64{0};
        const u64 py = j < y.size() ? y[j].first : ~u64{0};
        const u64 pos = std::min(px, py);
        const u64 vx = px == pos ? x[i++].second : 0;
        const u64 vy = py == pos ? y[j++].second : 0;
        if (vx != vy) return vx < vy;
    }
    return false;
}

void sort_canonical(std::vector<FactorRecord>& factors, u64 q) {
    std::vector<std::pair<SparseKey, FactorRecord>> keyed;
    keyed.reserve(factors.size());
    for (const auto& f : factors) keyed.emplace_back(f.sparse_coeffs(q), f);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& x, const auto& y) { return key_less(x.first, y.first); });
    for (std::size_t i = 0; i < factors.size(); ++i) factors[i] = std::move(keyed[i].second);
}

// prod over primes p | m, p not excluded, of (1 + nu_p(m) (p-1)/p)
Rational divisor_density_product(u64 m, u64 skip_prime) {
    Rational acc(1);
    for (auto [p, e] : numutil::factorize(m)) {
        if (p == skip_prime) continue;
        acc *= Rational(1) + Rational(static_cast<long long>(e)) * ratio(p - 1, p);
    }
    return acc;
}

}  // namespace

const char* to_string(Shape s) { return s == Shape::Binomial ? "binomial" : "trinomial"; }

poly::DensePoly FactorRecord::to_poly(u64 q) const {
    return shape == Shape::Binomial ? poly::DensePoly::binomial(q, t, a) : poly::DensePoly::trinomial(q, t, b, c);
}

std::vector<std::pair<u64, u64>> FactorRecord::sparse_coeffs(u64 q) const {
    std::vector<std::pair<u64, u64>> out;
    if (shape == Shape::Binomial) {
        if (a % q) out.emplace_back(0, (q - a % q) % q);
        out.emplace_back(t, 1);
    } else {
        if (c % q) out.emplace_back(0, c % q);
        if (b % q) out.emplace_back(t, (q - b % q) % q);
        out.emplace_back(2 * t, 1);
    }
    return out;
}

bool canonical_less(const FactorRecord& x, const FactorRecord& y, u64 q) {
    return key_less(x.sparse_coeffs(q), y.sparse_coeffs(q));
}

u64 FactorCensus::sum_of_entries() const {
    u64 s = 0;
    for (const auto& [key, count] : counts) s += count;
    return s;
}

FactorCensus tally(const Factorization& f) {
    FactorCensus census;
    for (const auto& rec : f.factors) census.counts[{rec.degree(), rec.shape}]++;
    census.total = f.factors.size();
    return census;
}

CaseTag classify(const gf::FieldCtx& ctx, u64 n) {
    if (n == 0) throw std::domain_error("classify: n must be positive");
    const u64 q = ctx.q();
    const u64 radn = numutil::rad(n);
    if ((q - 1) % radn != 0) {
        return {Case::Unsupported,
                "rad(n)=" + std::to_string(radn) + " does not divide q-1=" + std::to_string(q - 1)};
    }
    if (q % 4 == 3 && n % 8 == 0) return {Case::Case2, {}};
    return {Case::Case1, {}};
}

Case1Params case1_params(const gf::FieldCtx& ctx, u64 n) {
    const u64 g = std::gcd(n, ctx.q() - 1);
    return {n / g, (ctx.q() - 1) / g};
}

Case2Params case2_params(const gf::FieldCtx& ctx, u64 n) {
    const u64 q = ctx.q();
    const u64 order2 = q * q - 1;
    const u64 g1 = std::gcd(n, q - 1);
    const u64 g2 = std::gcd(n, order2);
    unsigned r = 0;
    if (n % 2 == 0) r = std::min(numutil::nu_p(2, n / 2), numutil::nu_p(2, q + 1));
    return {n / g2, (q - 1) / g1, order2 / g2, r};
}

bool binomial_is_irreducible(const gf::FieldCtx& ctx, u64 t, gf::FqElem a) {
    if (a.value % ctx.q() == 0) throw std::domain_error("binomial_is_irreducible: a must be nonzero");
    if (t == 0) throw std::domain_error("binomial_is_irreducible: t must be positive");
    if (t == 1) return true;
    const u64 ord = ctx.order(ctx.elem(a.value));
    if (ord % numutil::rad(t) != 0) return false;
    if (std::gcd(t, (ctx.q() - 1) / ord) != 1) return false;
    if (t % 4 == 0 && ctx.q() % 4 != 1) return false;
    return true;
}

bool binomial_divides_xn1(const gf::FieldCtx& ctx, u64 t, gf::FqElem a, u64 n) {
    if (a.value % ctx.q() == 0) throw std::domain_error("binomial_divides_xn1: a must be nonzero");
    if (t == 0 || n == 0) throw std::domain_error("binomial_divides_xn1: t and n must be positive");
    if (n % t != 0) return false;
    return std::gcd(ctx.q() - 1, n / t) % ctx.order(ctx.elem(a.value)) == 0;
}

std::pair<FactorRecord, FactorRecord> split_reducible_binomial(const gf::FieldCtx& ctx, u64 s, gf::FqElem a) {
    if (ctx.q() % 4 != 3) throw std::domain_error("split_reducible_binomial: needs q = 3 mod 4");
    if (s == 0) throw std::domain_error("split_reducible_binomial: s must be positive");
    a = ctx.elem(a.value);
    if (ctx.is_square(a)) {
        throw std::domain_error("split_reducible_binomial: " + std::to_string(a.value) + " is a square");
    }
    // -a is a square since -1 and a both are not. Exactly one of 2c, -2c is a square.
    gf::FqElem c = ctx.sqrt(ctx.neg(a));
    if (!ctx.is_square(ctx.add(c, c))) c = ctx.neg(c);
    const gf::FqElem b = ctx.sqrt(ctx.add(c, c));
    return {FactorRecord::trinomial(s, b.value, c.value), FactorRecord::trinomial(s, ctx.neg(b).value, c.value)};
}

Factorization factor_case1(const gf::FieldCtx& ctx, u64 n) {
    require_case(ctx, n, Case::Case1);
    const auto params = case1_params(ctx, n);
    const u64 g = std::gcd(n, ctx.q() - 1);
    Factorization out{ctx, std::nullopt, n, Case::Case1, params, {}};
    for (u64 t : numutil::divisors(params.m)) {
        for (u64 u = 1; u <= g; ++u) {
            if (std::gcd(u, t) != 1) continue;
            const u64 exponent = (u * params.l) % (ctx.q() - 1);
            out.factors.push_back(FactorRecord::binomial(t, ctx.pow(ctx.theta(), exponent).value));
        }
    }
    sort_canonical(out.factors, ctx.q());
    return out;
}

FactorCensus count_case1(const gf::FieldCtx& ctx, u64 n) {
    require_case(ctx, n, Case::Case1);
    const auto params = case1_params(ctx, n);
    const u64 g = std::gcd(n, ctx.q() - 1);
    FactorCensus census;
    for (u64 t : numutil::divisors(params.m)) {
        const Rational count = ratio(numutil::euler_phi(t), t) * Rational(static_cast<long long>(g));
        census.counts[{t, Shape::Binomial}] += as_count(count, "binomials of degree t");
    }
    const Rational total = Rational(static_cast<long long>(g)) * divisor_density_product(params.m, 0);
    census.total = as_count(total, "total factor count");
    return census;
}

std::vector<u64> build_Rt(const gf::QuadExtCtx& ctx2, u64 n, u64 t) {
    require_case(ctx2.base(), n, Case::Case2);
    const u64 q = ctx2.q();
    const auto params = case2_params(ctx2.base(), n);
    if (t == 0 || params.m % t != 0) {
        throw HypothesisError("t=" + std::to_string(t) + " does not divide m=" + std::to_string(params.m));
    }
    const u64 g2 = std::gcd(n, ctx2.group_order());
    const u64 two_r = u64{1} << params.r;
    std::vector<u64> out;
    for (u64 u = 1; u <= g2; ++u) {
        if (std::gcd(u, t) != 1 || u % two_r == 0) continue;
        if (u < numutil::mul_mod(q, u, g2)) out.push_back(u);
    }
    return out;
}

Factorization factor_case2(const gf::QuadExtCtx& ctx2, u64 n) {
    const gf::FieldCtx& base = ctx2.base();
    require_case(base, n, Case::Case2);
    const u64 q = base.q();
    const auto params = case2_params(base, n);
    const u64 g1 = std::gcd(n, q - 1);
    Factorization out{base, ctx2.alpha(), n, Case::Case2, params, {}};
    for (u64 t : numutil::divisors(params.m)) {
        if (t % 2 == 1) {
            for (u64 w = 1; w <= g1; ++w) {
                if (std::gcd(w, t) != 1) continue;
                const u64 exponent = (w * params.l1) % (q - 1);
                out.factors.push_back(FactorRecord::binomial(t, base.pow(base.theta(), exponent).value));
            }
        }
        for (u64 u : build_Rt(ctx2, n, t)) {
            const gf::Fq2Elem root = ctx2.pow(ctx2.alpha(), numutil::mul_mod(u, params.l2, ctx2.group_order()));
            const gf::FqElem b = ctx2.trace_sum(root);
            const gf::FqElem c = ctx2.norm(root);
            if (b.value == 0) {
                FactorRecord rec = FactorRecord::binomial(2 * t, base.neg(c).value);
                rec.degenerate_from_trinomial = true;
                out.factors.push_back(rec);
            } else {
                out.factors.push_back(FactorRecord::trinomial(t, b.value, c.value));
            }
        }
    }
    sort_canonical(out.factors, q);
    return out;
}

FactorCensus count_case2(const gf::QuadExtCtx& ctx2, u64 n) {
    const gf::FieldCtx& base = ctx2.base();
    require_case(base, n, Case::Case2);
    const u64 q = base.q();
    const auto params = case2_params(base, n);
    const Rational g1(static_cast<long long>(std::gcd(n, q - 1)));
    const Rational half_pow = Rational(1LL << (params.r - 1));
    FactorCensus census;
    for (u64 t : numutil::divisors(params.m)) {
        const Rational density = ratio(numutil::euler_phi(t), t);
        if (t % 2 == 1) {
            census.counts[{t, Shape::Binomial}] += as_count(density * g1, "binomials of degree t");
            census.counts[{2 * t, Shape::Binomial}] += as_count(density / Rational(2) * g1, "binomials of degree 2t");
            const u64 tri = as_count(density * (half_pow - Rational(1)) * g1, "trinomials, odd t");
            if (tri) census.counts[{2 * t, Shape::Trinomial}] += tri;
        } else {
            census.counts[{2 * t, Shape::Trinomial}] += as_count(density * half_pow * g1, "trinomials, even t");
        }
    }
    const Rational middle =
        Rational(1, 2) + Rational(1LL << params.r, 4) * Rational(2 + static_cast<long long>(numutil::nu_p(2, params.m)));
    const Rational total = g1 * middle * divisor_density_product(params.m, 2);
    census.total = as_count(total, "total factor count");
    return census;
}

FactorOutcome factor_xn_minus_1(u64 q, u64 n, const DispatchOptions& opts) {
    const gf::FieldCtx field = gf::make_field(q);
    if (n == 0 || n >= gf::kMaxModulus) throw std::domain_error("n must lie in [1, 2^31): " + std::to_string(n));
    const CaseTag tag = classify(field, n);
    switch (tag.kind) {
        case Case::Case1:
            return factor_case1(field, n);
        case Case::Case2:
            return factor_case2(gf::make_quad_ext(field), n);
        case Case::Unsupported:
            break;
    }
    Unsupported un{q, n, tag.reason, std::nullopt};
    if (n <= opts.diagnostic_bound) un.diagnostic = poly::oracle_factorize(poly::xn_minus_1(n, field), opts.seed);
    return un;
}

CensusOutcome count_xn_minus_1(u64 q, u64 n) {
    const gf::FieldCtx field = gf::make_field(q);
    if (n == 0 || n >= gf::kMaxModulus) throw std::domain_error("n must lie in [1, 2^31): " + std::to_string(n));
    const CaseTag tag = classify(field, n);
    if (tag.kind == Case::Case1) {
        return CensusReport{field, std::nullopt, n, Case::Case1, case1_params(field, n), count_case1(field, n)};
    }
    if (tag.kind == Case::Case2) {
        const auto ext = gf::make_quad_ext(field);
        return CensusReport{ext.base(), ext.alpha(), n, Case::Case2, case2_params(ext.base(), n), count_case2(ext, n)};
    }
    return Unsupported{q, n, tag.reason, std::nullopt};
}

bool Verification::ok() const {
    return product_matches && std::all_of(irreducible.begin(), irreducible.end(), [](bool b) { return b; });
}

Verification verify(const Factorization& f, unsigned jobs) {
    const u64 q = f.q();
    Verification v;
    poly::DensePoly product = poly::DensePoly::constant(q, 1);
    for (const auto& rec : f.factors) product = poly::mul(product, rec.to_poly(q));
    v.product_matches = product == poly::xn_minus_1(f.n, f.field);

    std::vector<char> ok(f.factors.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < f.factors.size(); i = next++) {
            ok[i] = poly::is_irreducible(f.factors[i].to_poly(q)) ? 1 : 0;
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    v.irreducible.assign(ok.begin(), ok.end());
    return v;
}

}  // namespace xnfactor::cyclo
