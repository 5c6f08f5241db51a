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

#ifndef XNFACTOR_DOCUMENT_HPP
#define XNFACTOR_DOCUMENT_HPP

#include <cstddef>
#include <string>

#include "json.hpp"
#include "xnfactor/cyclofactor.hpp"

namespace xnfactor::doc {

inline constexpr int kSchemaVersion = 1;

/// "case=1 m=2 l=1" or "case=2 m=1 l1=1 l2=1 r=2".
std::string params_line(cyclo::Case kind, const std::variant<cyclo::Case1Params, cyclo::Case2Params>& params);

/// params_line plus the generators used, e.g. "case=1 m=2 l=1 theta=2".
std::string factor_header(const cyclo::Factorization& f);

nlohmann::json census_json(const cyclo::FactorCensus& census);

/// Full output document. At most max_factors entries are listed; the census
/// always covers every factor.
nlohmann::json factorization_json(const cyclo::Factorization& f, std::size_t max_factors,
                                  const cyclo::Verification* verification = nullptr);

nlohmann::json unsupported_json(const cyclo::Unsupported& u);

nlohmann::json poly_json(const poly::DensePoly& f);

}  // namespace xnfactor::doc

#endif  // XNFACTOR_DOCUMENT_HPP
