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

#include "xnfactor/numutil.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace xnfactor::numutil {

namespace {

void check_range(u64 m) {
    if (m == 0 || m >= kFactorLimit) {
        throw std::domain_error("integer out of range [1, 2^63): " + std::to_string(m));
    }
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 m) {
    if (m < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (m % p == 0) return m == p;
    }
    u64 d = m - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is exact below 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(m, a, d, s)) return false;
    }
    return true;
}

PrimeFactorization factorize(u64 m) {
    check_range(m);
    PrimeFactorization out;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    };
    take(2);
    take(3);
    for (u64 p = 5; p * p <= m; p += 6) {
        take(p);
        take(p + 2);
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

PrimeFactorization factorize_product(u64 a, u64 b) {
    auto fa = factorize(a);
    auto fb = factorize(b);
    PrimeFactorization out;
    std::size_t i = 0, j = 0;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].p < fb[j].p)) {
            out.push_back(fa[i++]);
        } else if (i == fa.size() || fb[j].p < fa[i].p) {
            out.push_back(fb[j++]);
        } else {
            out.push_back({fa[i].p, fa[i].e + fb[j].e});
            ++i;
            ++j;
        }
    }
    return out;
}

u64 expand(const PrimeFactorization& f) {
    u64 m = 1;
    for (auto [p, e] : f) {
        for (unsigned i = 0; i < e; ++i) m *= p;
    }
    return m;
}

unsigned nu_p(u64 p, u64 m) {
    if (!is_prime(p)) throw std::domain_error("nu_p: " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::domain_error("nu_p: m must be positive");
    unsigned e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

u64 rad(u64 m) {
    u64 r = 1;
    for (auto [p, e] : factorize(m)) r *= p;
    return r;
}

unsigned big_omega(u64 m) {
    unsigned total = 0;
    for (auto [p, e] : factorize(m)) total += e;
    return total;
}

u64 euler_phi(u64 m) {
    u64 phi = m;
    for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
    return phi;
}

std::vector<u64> divisors(const PrimeFactorization& f) {
    std::vector<u64> out{1};
    for (auto [p, e] : f) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 m) { return divisors(factorize(m)); }

}  // namespace xnfactor::numutil
