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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "xnfactor/cyclofactor.hpp"
#include "xnfactor/document.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace xnfactor;
using numutil::u64;

namespace {

struct UnsupportedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* case_name(cyclo::Case c) {
    switch (c) {
        case cyclo::Case::Case1:
            return "case1";
        case cyclo::Case::Case2:
            return "case2";
        default:
            return "unsupported";
    }
}

py::dict params_dict(const std::variant<cyclo::Case1Params, cyclo::Case2Params>& params) {
    py::dict d;
    if (const auto* p1 = std::get_if<cyclo::Case1Params>(&params)) {
        d["m"] = p1->m;
        d["l"] = p1->l;
    } else {
        const auto& p2 = std::get<cyclo::Case2Params>(params);
        d["m"] = p2.m;
        d["l1"] = p2.l1;
        d["l2"] = p2.l2;
        d["r"] = p2.r;
    }
    return d;
}

py::dict census_dict(const cyclo::FactorCensus& census) {
    py::dict entries;
    for (const auto& [key, count] : census.counts) {
        entries[py::make_tuple(key.degree, cyclo::to_string(key.shape))] = count;
    }
    py::dict d;
    d["total"] = census.total;
    d["entries"] = entries;
    return d;
}

cyclo::Factorization factor_or_throw(u64 q, u64 n) {
    auto outcome = cyclo::factor_xn_minus_1(q, n, {0, 1});
    if (auto* un = std::get_if<cyclo::Unsupported>(&outcome)) throw UnsupportedCase(un->reason);
    return std::get<cyclo::Factorization>(std::move(outcome));
}

std::vector<u64> coeffs_of(const poly::DensePoly& p) { return p.coeffs(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = R"pbdoc(
        Explicit factorization of x^n - 1 over prime fields into irreducible
        binomials and trinomials, with an independent verification oracle.
    )pbdoc";

    py::register_exception<UnsupportedCase>(m, "UnsupportedError", PyExc_ValueError);

    py::class_<cyclo::FactorRecord>(m, "FactorRecord")
        .def_property_readonly("shape", [](const cyclo::FactorRecord& r) { return cyclo::to_string(r.shape); })
        .def_readonly("t", &cyclo::FactorRecord::t)
        .def_readonly("a", &cyclo::FactorRecord::a)
        .def_readonly("b", &cyclo::FactorRecord::b)
        .def_readonly("c", &cyclo::FactorRecord::c)
        .def_readonly("degenerate", &cyclo::FactorRecord::degenerate_from_trinomial)
        .def_property_readonly("degree", &cyclo::FactorRecord::degree)
        .def("__repr__", [](const cyclo::FactorRecord& r) {
            return std::string("<FactorRecord ") + cyclo::to_string(r.shape) + " t=" + std::to_string(r.t) + ">";
        });

    py::class_<cyclo::Factorization>(m, "Factorization")
        .def_property_readonly("q", &cyclo::Factorization::q)
        .def_readonly("n", &cyclo::Factorization::n)
        .def_property_readonly("case", [](const cyclo::Factorization& f) { return case_name(f.kind); })
        .def_property_readonly("params", [](const cyclo::Factorization& f) { return params_dict(f.params); })
        .def_property_readonly("theta", [](const cyclo::Factorization& f) { return f.field.theta().value; })
        .def_property_readonly("alpha",
                               [](const cyclo::Factorization& f) -> py::object {
                                   if (!f.alpha) return py::none();
                                   return py::make_tuple(f.alpha->re, f.alpha->im);
                               })
        .def_readonly("factors", &cyclo::Factorization::factors)
        .def("polynomials",
             [](const cyclo::Factorization& f) {
                 std::vector<std::vector<u64>> out;
                 for (const auto& rec : f.factors) out.push_back(rec.to_poly(f.q()).coeffs());
                 return out;
             },
             "Coefficient lists, low degree first, in canonical order.")
        .def("strings",
             [](const cyclo::Factorization& f) {
                 std::vector<std::string> out;
                 for (const auto& rec : f.factors) out.push_back(poly::to_string(rec.to_poly(f.q())));
                 return out;
             })
        .def("census", [](const cyclo::Factorization& f) { return census_dict(cyclo::tally(f)); })
        .def("verify",
             [](const cyclo::Factorization& f, unsigned jobs) {
                 const auto v = cyclo::verify(f, jobs);
                 return py::make_tuple(v.product_matches, v.irreducible);
             },
             py::arg("jobs") = 1);

    m.def("classify",
          [](u64 q, u64 n) {
              const auto tag = cyclo::classify(gf::make_field(q), n);
              return py::make_tuple(case_name(tag.kind), tag.reason);
          },
          py::arg("q"), py::arg("n"));

    m.def("factor", &factor_or_throw, py::arg("q"), py::arg("n"),
          "Factor x^n - 1 over F_q. Raises UnsupportedError outside the supported hypotheses.");

    m.def("count",
          [](u64 q, u64 n) {
              auto outcome = cyclo::count_xn_minus_1(q, n);
              if (auto* un = std::get_if<cyclo::Unsupported>(&outcome)) throw UnsupportedCase(un->reason);
              return census_dict(std::get<cyclo::CensusReport>(outcome).census);
          },
          py::arg("q"), py::arg("n"));

    m.def("factor_json",
          [](u64 q, u64 n, bool verify) {
              const auto f = factor_or_throw(q, n);
              if (!verify) return doc::factorization_json(f, f.factors.size()).dump();
              const auto v = cyclo::verify(f);
              return doc::factorization_json(f, f.factors.size(), &v).dump();
          },
          py::arg("q"), py::arg("n"), py::arg("verify") = false);

    m.def("cyclotomic",
          [](u64 q, u64 d) { return coeffs_of(poly::cyclotomic_poly(d, gf::make_field(q))); },
          py::arg("q"), py::arg("d"));

    m.def("is_irreducible",
          [](u64 q, std::vector<u64> coeffs) { return poly::is_irreducible(poly::DensePoly(q, std::move(coeffs))); },
          py::arg("q"), py::arg("coeffs"));

    m.def("oracle_factorize",
          [](u64 q, std::vector<u64> coeffs, u64 seed) {
              std::vector<std::pair<std::vector<u64>, unsigned>> out;
              for (const auto& of : poly::oracle_factorize(poly::DensePoly(q, std::move(coeffs)), seed)) {
                  out.emplace_back(of.factor.coeffs(), of.multiplicity);
              }
              return out;
          },
          py::arg("q"), py::arg("coeffs"), py::arg("seed") = 1);

    m.def("binomial_is_irreducible",
          [](u64 q, u64 t, u64 a) { return cyclo::binomial_is_irreducible(gf::make_field(q), t, {a % q}); },
          py::arg("q"), py::arg("t"), py::arg("a"));

    m.def("binomial_divides_xn1",
          [](u64 q, u64 t, u64 a, u64 n) { return cyclo::binomial_divides_xn1(gf::make_field(q), t, {a % q}, n); },
          py::arg("q"), py::arg("t"), py::arg("a"), py::arg("n"));

    m.def("split_reducible_binomial",
          [](u64 q, u64 s, u64 a) {
              const auto [lo, hi] = cyclo::split_reducible_binomial(gf::make_field(q), s, {a % q});
              return py::make_tuple(py::make_tuple(lo.b, lo.c), py::make_tuple(hi.b, hi.c));
          },
          py::arg("q"), py::arg("s"), py::arg("a"));

    m.def("build_Rt",
          [](u64 q, u64 n, u64 t) { return cyclo::build_Rt(gf::make_quad_ext(gf::make_field(q)), n, t); },
          py::arg("q"), py::arg("n"), py::arg("t"));

    m.def("generator", [](u64 q) { return gf::make_field(q).theta().value; }, py::arg("q"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
