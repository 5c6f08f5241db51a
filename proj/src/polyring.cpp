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

#include "xnfactor/polyring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace xnfactor::poly {

namespace {

void require_same_field(const DensePoly& f, const DensePoly& g) {
    if (f.modulus() != g.modulus()) {
        throw std::domain_error("polynomials over different fields: F_" + std::to_string(f.modulus()) +
                                " and F_" + std::to_string(g.modulus()));
    }
}

u64 inv_mod(u64 a, u64 q) {
    if (a % q == 0) throw std::domain_error("division by zero in F_" + std::to_string(q));
    return numutil::pow_mod(a, q - 2, q);
}

// Accumulates sums of products of residues in 64 bits, reducing only when
// another product could overflow.
class LazyAccumulator {
public:
    explicit LazyAccumulator(u64 q) : q_(q) {
        const u64 bound = (q - 1) * (q - 1);
        budget_ = bound == 0 ? std::numeric_limits<u64>::max()
                             : std::max<u64>(1, (std::numeric_limits<u64>::max() - q) / bound);
    }

    // Call once per accumulation row; reduces acc when the budget runs out.
    void tick(std::vector<u64>& acc) {
        if (++used_ == budget_) {
            for (auto& v : acc) v %= q_;
            used_ = 0;
        }
    }

private:
    u64 q_;
    u64 budget_;
    u64 used_ = 0;
};

std::vector<std::size_t> support(const std::vector<u64>& c) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i]) idx.push_back(i);
    }
    return idx;
}

// In-place reduction of r modulo g, with g monic or not.
void reduce_in_place(std::vector<u64>& r, const DensePoly& g, std::vector<u64>* quot) {
    const u64 q = g.modulus();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const u64 lead_inv = inv_mod(gc.back(), q);
    const auto idx = support(gc);
    if (quot) quot->assign(r.size() >= gc.size() ? r.size() - dg : 0, 0);
    for (std::size_t i = r.size(); i-- > dg;) {
        const u64 top = r[i] % q;
        if (top == 0) continue;
        const u64 factor = top * lead_inv % q;
        if (quot) (*quot)[i - dg] = factor;
        const u64 negf = q - factor;
        for (std::size_t k : idx) {
            u64& slot = r[i - dg + k];
            slot = (slot + negf * gc[k]) % q;
        }
    }
    r.resize(std::min(r.size(), dg));
}

}  // namespace

DensePoly::DensePoly(u64 q, std::vector<u64> coeffs) : q_(q), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= q_;
    normalize();
}

void DensePoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

DensePoly DensePoly::monomial(u64 q, std::size_t degree, u64 c) {
    std::vector<u64> v(degree + 1, 0);
    v[degree] = c;
    return DensePoly(q, std::move(v));
}

DensePoly DensePoly::binomial(u64 q, std::size_t t, u64 a) {
    std::vector<u64> v(t + 1, 0);
    v[t] = 1;
    v[0] = (q - a % q) % q;
    return DensePoly(q, std::move(v));
}

DensePoly DensePoly::trinomial(u64 q, std::size_t t, u64 b, u64 c) {
    std::vector<u64> v(2 * t + 1, 0);
    v[2 * t] = 1;
    v[t] = (q - b % q) % q;
    v[0] = c % q;
    return DensePoly(q, std::move(v));
}

std::size_t DensePoly::nonzero_terms() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](u64 v) { return v != 0; }));
}

bool canonical_less(const DensePoly& a, const DensePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

DensePoly add(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const u64 q = f.modulus();
    std::vector<u64> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f.coeff(i) + g.coeff(i)) % q;
    return DensePoly(q, std::move(c));
}

DensePoly neg(const DensePoly& f) { return scale(f, f.modulus() - 1); }

DensePoly sub(const DensePoly& f, const DensePoly& g) { return add(f, neg(g)); }

DensePoly scale(const DensePoly& f, u64 c) {
    const u64 q = f.modulus();
    std::vector<u64> out(f.coeffs());
    for (auto& v : out) v = v * (c % q) % q;
    return DensePoly(q, std::move(out));
}

DensePoly mul(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const u64 q = f.modulus();
    if (f.is_zero() || g.is_zero()) return DensePoly(q);
    // Walk the sparser operand in the outer loop.
    const bool swap = f.nonzero_terms() > g.nonzero_terms();
    const auto& outer = swap ? g.coeffs() : f.coeffs();
    const auto& inner = swap ? f.coeffs() : g.coeffs();
    std::vector<u64> acc(outer.size() + inner.size() - 1, 0);
    LazyAccumulator lazy(q);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const u64 a = outer[i];
        if (a == 0) continue;
        u64* dst = acc.data() + i;
        for (std::size_t j = 0; j < inner.size(); ++j) dst[j] += a * inner[j];
        lazy.tick(acc);
    }
    return DensePoly(q, std::move(acc));
}

std::pair<DensePoly, DensePoly> divrem(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<u64> r = f.coeffs();
    std::vector<u64> quot;
    reduce_in_place(r, g, &quot);
    return {DensePoly(f.modulus(), std::move(quot)), DensePoly(f.modulus(), std::move(r))};
}

DensePoly rem(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<u64> r = f.coeffs();
    reduce_in_place(r, g, nullptr);
    return DensePoly(f.modulus(), std::move(r));
}

DensePoly exact_div(const DensePoly& f, const DensePoly& g) {
    auto [quot, r] = divrem(f, g);
    if (!r.is_zero()) throw std::logic_error("exact_div: divisor leaves a remainder");
    return quot;
}

DensePoly make_monic(const DensePoly& f) {
    if (f.is_zero() || f.is_monic()) return f;
    return scale(f, inv_mod(f.leading(), f.modulus()));
}

DensePoly gcd_poly(DensePoly f, DensePoly g) {
    require_same_field(f, g);
    while (!g.is_zero()) {
        DensePoly r = rem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f);
}

DensePoly powmod(const DensePoly& f, u64 e, const DensePoly& h) {
    require_same_field(f, h);
    DensePoly base = rem(f, h);
    DensePoly result = rem(DensePoly::constant(h.modulus(), 1), h);
    while (e) {
        if (e & 1) result = rem(mul(result, base), h);
        e >>= 1;
        if (e) base = rem(mul(base, base), h);
    }
    return result;
}

u64 eval(const DensePoly& f, u64 a) {
    const u64 q = f.modulus();
    a %= q;
    u64 acc = 0;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = (acc * a + f.coeffs()[i]) % q;
    return acc;
}

DensePoly derivative(const DensePoly& f) {
    const u64 q = f.modulus();
    if (f.degree() < 1) return DensePoly(q);
    std::vector<u64> c(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) c[i - 1] = (i % q) * f.coeffs()[i] % q;
    return DensePoly(q, std::move(c));
}

DensePoly compose_power(const DensePoly& f, std::size_t k) {
    if (k == 0) throw std::domain_error("compose_power: exponent must be positive");
    if (f.is_zero()) return f;
    std::vector<u64> c((f.coeffs().size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * k] = f.coeffs()[i];
    return DensePoly(f.modulus(), std::move(c));
}

DensePoly negate_variable(const DensePoly& f) {
    const u64 q = f.modulus();
    std::vector<u64> c(f.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = (q - c[i]) % q;
    return DensePoly(q, std::move(c));
}

std::string to_string(const DensePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const u64 c = f.coeffs()[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

DensePoly xn_minus_1(u64 n, const gf::FieldCtx& ctx) {
    return DensePoly::binomial(ctx.q(), static_cast<std::size_t>(n), 1);
}

DensePoly cyclotomic_poly(u64 d, const gf::FieldCtx& ctx) {
    if (d == 0) throw std::domain_error("cyclotomic_poly: index must be positive");
    if (d % ctx.q() == 0) {
        throw std::domain_error("cyclotomic_poly: q=" + std::to_string(ctx.q()) + " divides d=" +
                                std::to_string(d));
    }
    // Phi_e for every e | d, built in increasing order of e.
    const auto divs = numutil::divisors(d);
    std::map<u64, DensePoly> phi;
    for (u64 e : divs) {
        DensePoly acc = xn_minus_1(e, ctx);
        for (const auto& [k, pk] : phi) {
            if (e % k == 0) acc = exact_div(acc, pk);
        }
        phi.emplace(e, std::move(acc));
    }
    return phi.at(d);
}

FrobeniusMap::FrobeniusMap(const DensePoly& f) : f_(f) {
    if (f.degree() < 1 || !f.is_monic()) {
        throw std::domain_error("FrobeniusMap: modulus must be monic of positive degree");
    }
    const u64 q = f.modulus();
    const auto d = static_cast<std::size_t>(f.degree());
    rows_.reserve(d);
    if (q <= 2 * d) {
        // Walk x^j mod f for j = 0, 1, ..., (d-1)q by repeated shifts.
        const auto& fc = f.coeffs();
        std::vector<u64> cur(d, 0);
        cur[0] = 1 % q;
        rows_.push_back(cur);
        for (std::size_t i = 1; i < d; ++i) {
            for (u64 s = 0; s < q; ++s) {
                const u64 top = cur[d - 1];
                for (std::size_t k = d - 1; k > 0; --k) cur[k] = cur[k - 1];
                cur[0] = 0;
                if (top) {
                    const u64 negtop = q - top;
                    for (std::size_t k = 0; k < d; ++k) {
                        if (fc[k]) cur[k] = (cur[k] + negtop * fc[k]) % q;
                    }
                }
            }
            rows_.push_back(cur);
        }
    } else {
        const DensePoly xq = powmod(DensePoly::monomial(q, 1), q, f);
        DensePoly cur = DensePoly::constant(q, 1);
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<u64> row = cur.coeffs();
            row.resize(d, 0);
            rows_.push_back(std::move(row));
            cur = rem(mul(cur, xq), f);
        }
    }
}

DensePoly FrobeniusMap::apply(const DensePoly& g) const {
    const u64 q = f_.modulus();
    const std::size_t d = rows_.size();
    if (g.degree() >= static_cast<long>(d)) throw std::domain_error("FrobeniusMap::apply: input not reduced");
    std::vector<u64> acc(d, 0);
    LazyAccumulator lazy(q);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
        const u64 a = g.coeffs()[i];
        if (a == 0) continue;
        const u64* row = rows_[i].data();
        for (std::size_t k = 0; k < d; ++k) acc[k] += a * row[k];
        lazy.tick(acc);
    }
    return DensePoly(q, std::move(acc));
}

bool is_irreducible(const DensePoly& f) {
    if (f.degree() < 1 || !f.is_monic()) {
        throw std::domain_error("is_irreducible: input must be monic of positive degree");
    }
    const auto d = static_cast<u64>(f.degree());
    if (d == 1) return true;
    const u64 q = f.modulus();
    std::vector<u64> checkpoints;
    for (auto [p, e] : numutil::factorize(d)) checkpoints.push_back(d / p);
    const DensePoly x = DensePoly::monomial(q, 1);
    const FrobeniusMap frob(f);
    DensePoly h = x;
    for (u64 k = 1; k <= d; ++k) {
        h = frob.apply(h);
        if (std::find(checkpoints.begin(), checkpoints.end(), k) != checkpoints.end()) {
            if (!gcd_poly(f, sub(h, x)).is_one()) return false;
        }
    }
    return h == x;
}

namespace {

DensePoly pth_root(const DensePoly& f) {
    const u64 p = f.modulus();
    std::vector<u64> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return DensePoly(p, std::move(c));
}

void squarefree_rec(const DensePoly& f, unsigned scale_by, std::vector<OracleFactor>& out) {
    const u64 p = f.modulus();
    DensePoly c = gcd_poly(f, derivative(f));
    DensePoly w = exact_div(f, c);
    unsigned i = 1;
    while (!w.is_one()) {
        DensePoly y = gcd_poly(w, c);
        DensePoly fac = exact_div(w, y);
        if (!fac.is_one()) out.push_back({std::move(fac), i * scale_by});
        c = exact_div(c, y);
        w = std::move(y);
        ++i;
    }
    if (!c.is_one()) squarefree_rec(pth_root(c), scale_by * static_cast<unsigned>(p), out);
}

using Rng = std::mt19937_64;

// Splits g, square-free with all irreducible factors of degree k.
void equal_degree_split(const DensePoly& g, std::size_t k, Rng& rng, std::vector<DensePoly>& out) {
    const auto d = static_cast<std::size_t>(g.degree());
    if (d == k) {
        out.push_back(g);
        return;
    }
    const u64 q = g.modulus();
    const FrobeniusMap frob(g);
    const DensePoly one = DensePoly::constant(q, 1);
    std::uniform_int_distribution<u64> coeff(0, q - 1);
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<u64> rc(d);
        for (auto& v : rc) v = coeff(rng);
        const DensePoly a(q, std::move(rc));
        if (a.degree() < 1) continue;
        DensePoly split = gcd_poly(g, a);
        if (split.is_one()) {
            // a^{(q^k - 1)/2} = (a * a^q * ... * a^{q^{k-1}})^{(q-1)/2}
            DensePoly norm = a;
            DensePoly conj = a;
            for (std::size_t j = 1; j < k; ++j) {
                conj = frob.apply(conj);
                norm = rem(mul(norm, conj), g);
            }
            const DensePoly b = powmod(norm, (q - 1) / 2, g);
            split = gcd_poly(g, sub(b, one));
        }
        if (split.degree() > 0 && split.degree() < g.degree()) {
            equal_degree_split(split, k, rng, out);
            equal_degree_split(exact_div(g, split), k, rng, out);
            return;
        }
    }
    throw std::runtime_error("equal-degree splitting failed after 64 attempts");
}

}  // namespace

std::vector<OracleFactor> squarefree_decomposition(const DensePoly& f) {
    if (f.degree() < 1) throw std::domain_error("squarefree_decomposition: degree must be positive");
    std::vector<OracleFactor> out;
    squarefree_rec(make_monic(f), 1, out);
    return out;
}

std::vector<OracleFactor> oracle_factorize(const DensePoly& f, u64 seed) {
    if (f.degree() < 1) throw std::domain_error("oracle_factorize: degree must be positive");
    const u64 q = f.modulus();
    Rng rng(seed);
    const DensePoly x = DensePoly::monomial(q, 1);
    std::vector<OracleFactor> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        // Distinct-degree factorization of the square-free part.
        std::vector<std::pair<DensePoly, std::size_t>> buckets;
        DensePoly rest = part;
        if (part.degree() >= 2) {
            const FrobeniusMap frob(part);
            DensePoly h = x;
            for (std::size_t i = 1; rest.degree() >= static_cast<long>(2 * i); ++i) {
                h = frob.apply(h);
                DensePoly g = gcd_poly(rest, sub(h, x));
                if (!g.is_one()) {
                    rest = exact_div(rest, g);
                    buckets.emplace_back(std::move(g), i);
                }
            }
        }
        if (rest.degree() > 0) buckets.emplace_back(rest, static_cast<std::size_t>(rest.degree()));
        for (const auto& [g, k] : buckets) {
            std::vector<DensePoly> irreducibles;
            equal_degree_split(g, k, rng, irreducibles);
            for (auto& p : irreducibles) out.push_back({std::move(p), mult});
        }
    }
    // Square-free parts are pairwise coprime, so factors never repeat.
    std::sort(out.begin(), out.end(),
              [](const OracleFactor& a, const OracleFactor& b) { return canonical_less(a.factor, b.factor); });
    return out;
}

}  // namespace xnfactor::poly
