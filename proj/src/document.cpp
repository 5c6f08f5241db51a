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

#include "xnfactor/document.hpp"

#include <sstream>

namespace xnfactor::doc {

using nlohmann::json;

namespace {

json params_json(const std::variant<cyclo::Case1Params, cyclo::Case2Params>& params) {
    if (const auto* p1 = std::get_if<cyclo::Case1Params>(&params)) return {{"m", p1->m}, {"l", p1->l}};
    const auto& p2 = std::get<cyclo::Case2Params>(params);
    return {{"m", p2.m}, {"l1", p2.l1}, {"l2", p2.l2}, {"r", p2.r}};
}

json generators_json(const gf::FieldCtx& field, const std::optional<gf::Fq2Elem>& alpha) {
    json g = {{"theta", field.theta().value}};
    if (alpha) g["alpha"] = {alpha->re, alpha->im};
    return g;
}

}  // namespace

std::string params_line(cyclo::Case kind, const std::variant<cyclo::Case1Params, cyclo::Case2Params>& params) {
    std::ostringstream os;
    if (kind == cyclo::Case::Case1) {
        const auto& p = std::get<cyclo::Case1Params>(params);
        os << "case=1 m=" << p.m << " l=" << p.l;
    } else {
        const auto& p = std::get<cyclo::Case2Params>(params);
        os << "case=2 m=" << p.m << " l1=" << p.l1 << " l2=" << p.l2 << " r=" << p.r;
    }
    return os.str();
}

std::string factor_header(const cyclo::Factorization& f) {
    std::ostringstream os;
    os << params_line(f.kind, f.params) << " theta=" << f.field.theta().value;
    if (f.alpha) os << " alpha=(" << f.alpha->re << "," << f.alpha->im << ")";
    return os.str();
}

json census_json(const cyclo::FactorCensus& census) {
    json entries = json::array();
    for (const auto& [key, count] : census.counts) {
        entries.push_back({{"degree", key.degree}, {"shape", cyclo::to_string(key.shape)}, {"count", count}});
    }
    return {{"total", census.total}, {"entries", entries}};
}

json poly_json(const poly::DensePoly& f) { return f.coeffs(); }

json factorization_json(const cyclo::Factorization& f, std::size_t max_factors,
                        const cyclo::Verification* verification) {
    json doc = {
        {"schema", kSchemaVersion},
        {"q", f.q()},
        {"n", f.n},
        {"case", f.kind == cyclo::Case::Case1 ? 1 : 2},
        {"parameters", params_json(f.params)},
        {"generators", generators_json(f.field, f.alpha)},
    };
    json factors = json::array();
    const std::size_t shown = std::min(max_factors, f.factors.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const auto& rec = f.factors[i];
        factors.push_back({
            {"shape", cyclo::to_string(rec.shape)},
            {"t", rec.t},
            {"degree", rec.degree()},
            {"coefficients", rec.to_poly(f.q()).coeffs()},
            {"degenerate", rec.degenerate_from_trinomial},
        });
    }
    doc["factors"] = std::move(factors);
    doc["factor_count"] = f.factors.size();
    doc["truncated"] = shown < f.factors.size();
    doc["census"] = census_json(cyclo::tally(f));
    if (verification) {
        doc["verification"] = {
            {"product", verification->product_matches},
            {"irreducible", verification->irreducible},
        };
    }
    return doc;
}

json unsupported_json(const cyclo::Unsupported& u) {
    json doc = {{"schema", kSchemaVersion}, {"q", u.q}, {"n", u.n}, {"case", "unsupported"}, {"reason", u.reason}};
    if (u.diagnostic) {
        json diag = json::array();
        for (const auto& of : *u.diagnostic) {
            diag.push_back({{"coefficients", of.factor.coeffs()}, {"multiplicity", of.multiplicity}});
        }
        doc["diagnostic"] = std::move(diag);
    }
    return doc;
}

}  // namespace xnfactor::doc
