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

#ifndef XNFACTOR_NUMUTIL_HPP
#define XNFACTOR_NUMUTIL_HPP

#include <cstdint>
#include <vector>

namespace xnfactor::numutil {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Largest integer accepted by the factoring routines (exclusive).
inline constexpr u64 kFactorLimit = u64{1} << 63;

struct PrimePower {
    u64 p;
    unsigned e;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization as (p, e) pairs, strictly increasing in p.
using PrimeFactorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

/// Deterministic for all 64-bit inputs.
bool is_prime(u64 m);

/// Trial division. Throws std::domain_error unless 1 <= m < 2^63.
PrimeFactorization factorize(u64 m);

/// Factorization of a product a*b assembled from the factors of a and b.
PrimeFactorization factorize_product(u64 a, u64 b);

u64 expand(const PrimeFactorization& f);

/// p-adic valuation of m. Throws std::domain_error if p is not prime or m == 0.
unsigned nu_p(u64 p, u64 m);

u64 rad(u64 m);
unsigned big_omega(u64 m);
u64 euler_phi(u64 m);

/// All positive divisors, ascending.
std::vector<u64> divisors(u64 m);
std::vector<u64> divisors(const PrimeFactorization& f);

}  // namespace xnfactor::numutil

#endif  // XNFACTOR_NUMUTIL_HPP
