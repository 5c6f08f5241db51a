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

#ifndef XNFACTOR_SELFTEST_HPP
#define XNFACTOR_SELFTEST_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace xnfactor::selftest {

struct Options {
    std::uint64_t qmax = 31;
    std::uint64_t nmax = 512;
    std::uint64_t seed = 1;
    /// Oracle comparison runs for n up to this bound.
    std::uint64_t oracle_max = 512;
    unsigned jobs = 1;
};

struct Report {
    std::uint64_t pairs = 0;
    std::uint64_t factors = 0;
    std::uint64_t oracle_checks = 0;
    /// First violation, e.g. "q=7 n=9: census total 4 != enumerated 5".
    std::optional<std::string> failure;
};

/// Sweeps every prime q in [3, qmax] and n in [1, nmax] with rad(n) | q-1,
/// checking reconstruction, irreducibility, census agreement and (for small n)
/// equality with the oracle factorization. Stops at the first violation.
Report run(const Options& opts);

}  // namespace xnfactor::selftest

#endif  // XNFACTOR_SELFTEST_HPP
