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

#include "xnfactor/selftest.hpp"

#include <sstream>

#include "xnfactor/cyclofactor.hpp"

namespace xnfactor::selftest {

namespace {

std::optional<std::string> check_pair(const gf::FieldCtx& field, const std::optional<gf::QuadExtCtx>& ext,
                                      std::uint64_t n, const Options& opts, Report& report) {
    const auto tag = cyclo::classify(field, n);
    if (tag.kind == cyclo::Case::Unsupported) return std::nullopt;
    const bool case2 = tag.kind == cyclo::Case::Case2;
    const cyclo::Factorization f = case2 ? cyclo::factor_case2(*ext, n) : cyclo::factor_case1(field, n);
    const std::uint64_t q = field.q();

    std::uint64_t degree_sum = 0;
    for (const auto& rec : f.factors) degree_sum += rec.degree();
    if (degree_sum != n) return "factor degrees sum to " + std::to_string(degree_sum);

    const auto v = cyclo::verify(f, opts.jobs);
    if (!v.product_matches) return std::string("product of factors differs from x^n - 1");
    for (std::size_t i = 0; i < v.irreducible.size(); ++i) {
        if (!v.irreducible[i]) return "reducible factor " + poly::to_string(f.factors[i].to_poly(q));
    }

    const cyclo::FactorCensus formula = case2 ? cyclo::count_case2(*ext, n) : cyclo::count_case1(field, n);
    const cyclo::FactorCensus counted = cyclo::tally(f);
    if (formula.total != counted.total) {
        return "census total " + std::to_string(formula.total) + " != enumerated " + std::to_string(counted.total);
    }
    if (formula.counts != counted.counts) return std::string("per-degree census differs from enumeration");

    if (n <= opts.oracle_max) {
        const auto oracle = poly::oracle_factorize(poly::xn_minus_1(n, field), opts.seed);
        bool same = oracle.size() == f.factors.size();
        for (std::size_t i = 0; same && i < oracle.size(); ++i) {
            same = oracle[i].multiplicity == 1 && oracle[i].factor == f.factors[i].to_poly(q);
        }
        if (!same) return std::string("factor list differs from oracle factorization");
        ++report.oracle_checks;
    }
    ++report.pairs;
    report.factors += f.factors.size();
    return std::nullopt;
}

}  // namespace

Report run(const Options& opts) {
    Report report;
    for (std::uint64_t q = 3; q <= opts.qmax; ++q) {
        if (!numutil::is_prime(q)) continue;
        const gf::FieldCtx field = gf::make_field(q);
        std::optional<gf::QuadExtCtx> ext;
        if (q % 4 == 3) ext = gf::make_quad_ext(field);
        for (std::uint64_t n = 1; n <= opts.nmax; ++n) {
            std::optional<std::string> problem;
            try {
                problem = check_pair(field, ext, n, opts, report);
            } catch (const std::exception& e) {
                problem = std::string("exception: ") + e.what();
            }
            if (problem) {
                report.failure = "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + *problem;
                return report;
            }
        }
    }
    return report;
}

}  // namespace xnfactor::selftest
