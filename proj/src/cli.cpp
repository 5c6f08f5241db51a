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

#include "xnfactor/cli.hpp"

#include <chrono>
#include <optional>

#include "CLI11.hpp"
#include "xnfactor/cyclofactor.hpp"
#include "xnfactor/document.hpp"
#include "xnfactor/selftest.hpp"

namespace xnfactor::cli {

namespace {

using numutil::u64;

struct Flags {
    u64 q = 0;
    u64 n = 0;
    u64 d = 0;
    std::string format = "text";
    bool verify = false;
    std::size_t max_factors = 1000000;
    unsigned jobs = 1;
    u64 seed = 1;
    u64 qmax = 31;
    u64 nmax = 512;
    u64 oracle_max = 512;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ModulusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_q(u64 q) {
    if (q < 3 || q >= gf::kMaxModulus || !numutil::is_prime(q)) {
        throw ModulusError("q=" + std::to_string(q) + " must be a prime in [3, 2^31)");
    }
}

void check_n(u64 n, const char* name) {
    if (n == 0 || n >= gf::kMaxModulus) {
        throw UsageError(std::string(name) + "=" + std::to_string(n) + " must lie in [1, 2^31)");
    }
}

void print_unsupported(const cyclo::Unsupported& u, const Flags& flags, std::ostream& out) {
    if (flags.format == "json") {
        out << doc::unsupported_json(u).dump(2) << '\n';
        return;
    }
    out << "unsupported: " << u.reason << '\n';
    if (u.diagnostic) {
        for (const auto& of : *u.diagnostic) {
            out << "# oracle: " << poly::to_string(of.factor);
            if (of.multiplicity > 1) out << " (multiplicity " << of.multiplicity << ")";
            out << '\n';
        }
    }
}

int cmd_factor(const Flags& flags, std::ostream& out) {
    check_q(flags.q);
    check_n(flags.n, "n");
    const auto outcome = cyclo::factor_xn_minus_1(flags.q, flags.n, {512, flags.seed});
    if (const auto* un = std::get_if<cyclo::Unsupported>(&outcome)) {
        print_unsupported(*un, flags, out);
        return kExitUnsupported;
    }
    const auto& f = std::get<cyclo::Factorization>(outcome);
    std::optional<cyclo::Verification> v;
    if (flags.verify) v = cyclo::verify(f, flags.jobs);

    if (flags.format == "json") {
        out << doc::factorization_json(f, flags.max_factors, v ? &*v : nullptr).dump(2) << '\n';
    } else {
        out << doc::factor_header(f) << '\n';
        const std::size_t shown = std::min(flags.max_factors, f.factors.size());
        for (std::size_t i = 0; i < shown; ++i) out << poly::to_string(f.factors[i].to_poly(f.q())) << '\n';
        if (shown < f.factors.size()) out << "# " << f.factors.size() - shown << " more factors not shown\n";
        if (v) {
            const auto good = std::count(v->irreducible.begin(), v->irreducible.end(), true);
            out << "# verify product=" << (v->product_matches ? "true" : "false") << " irreducible=" << good << '/'
                << v->irreducible.size() << '\n';
        }
    }
    return v && !v->ok() ? kExitVerifyFailed : kExitOk;
}

int cmd_count(const Flags& flags, std::ostream& out) {
    check_q(flags.q);
    check_n(flags.n, "n");
    const auto outcome = cyclo::count_xn_minus_1(flags.q, flags.n);
    if (const auto* un = std::get_if<cyclo::Unsupported>(&outcome)) {
        print_unsupported(*un, flags, out);
        return kExitUnsupported;
    }
    const auto& rep = std::get<cyclo::CensusReport>(outcome);
    if (flags.format == "json") {
        nlohmann::json j = {{"schema", doc::kSchemaVersion},
                            {"q", flags.q},
                            {"n", flags.n},
                            {"case", rep.kind == cyclo::Case::Case1 ? 1 : 2},
                            {"census", doc::census_json(rep.census)}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << doc::params_line(rep.kind, rep.params) << '\n';
    out << "total=" << rep.census.total << '\n';
    std::map<u64, std::pair<u64, u64>> by_degree;
    for (const auto& [key, count] : rep.census.counts) {
        auto& slot = by_degree[key.degree];
        (key.shape == cyclo::Shape::Binomial ? slot.first : slot.second) += count;
    }
    for (const auto& [degree, split] : by_degree) {
        out << "degree=" << degree << " count=" << split.first + split.second;
        if (split.first) out << " binomial=" << split.first;
        if (split.second) out << " trinomial=" << split.second;
        out << '\n';
    }
    return kExitOk;
}

int cmd_classify(const Flags& flags, std::ostream& out) {
    check_q(flags.q);
    check_n(flags.n, "n");
    const auto field = gf::make_field(flags.q);
    const auto tag = cyclo::classify(field, flags.n);
    if (tag.kind == cyclo::Case::Unsupported) {
        print_unsupported({flags.q, flags.n, tag.reason, std::nullopt}, flags, out);
        return kExitUnsupported;
    }
    std::variant<cyclo::Case1Params, cyclo::Case2Params> params;
    if (tag.kind == cyclo::Case::Case1) {
        params = cyclo::case1_params(field, flags.n);
    } else {
        params = cyclo::case2_params(field, flags.n);
    }
    if (flags.format == "json") {
        nlohmann::json j = {{"schema", doc::kSchemaVersion}, {"q", flags.q}, {"n", flags.n},
                            {"case", tag.kind == cyclo::Case::Case1 ? 1 : 2}};
        if (const auto* p1 = std::get_if<cyclo::Case1Params>(&params)) {
            j["parameters"] = {{"m", p1->m}, {"l", p1->l}};
        } else {
            const auto& p2 = std::get<cyclo::Case2Params>(params);
            j["parameters"] = {{"m", p2.m}, {"l1", p2.l1}, {"l2", p2.l2}, {"r", p2.r}};
        }
        out << j.dump(2) << '\n';
    } else {
        out << doc::params_line(tag.kind, params) << '\n';
    }
    return kExitOk;
}

int cmd_cyclotomic(const Flags& flags, std::ostream& out) {
    check_q(flags.q);
    check_n(flags.d, "d");
    if (flags.d % flags.q == 0) throw UsageError("q must not divide d");
    const auto phi = poly::cyclotomic_poly(flags.d, gf::make_field(flags.q));
    if (flags.format == "json") {
        nlohmann::json j = {{"schema", doc::kSchemaVersion}, {"q", flags.q}, {"d", flags.d},
                            {"coefficients", doc::poly_json(phi)}};
        out << j.dump(2) << '\n';
    } else {
        out << poly::to_string(phi) << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const Flags& flags, std::ostream& out) {
    check_q(flags.q);
    check_n(flags.n, "n");
    const auto field = gf::make_field(flags.q);
    const auto factors = poly::oracle_factorize(poly::xn_minus_1(flags.n, field), flags.seed);
    if (flags.format == "json") {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& of : factors) {
            list.push_back({{"coefficients", doc::poly_json(of.factor)}, {"multiplicity", of.multiplicity}});
        }
        nlohmann::json j = {{"schema", doc::kSchemaVersion}, {"q", flags.q}, {"n", flags.n},
                            {"seed", flags.seed}, {"factors", list}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "oracle q=" << flags.q << " n=" << flags.n << " seed=" << flags.seed << '\n';
    for (const auto& of : factors) {
        if (of.multiplicity > 1) {
            out << '(' << poly::to_string(of.factor) << ")^" << of.multiplicity << '\n';
        } else {
            out << poly::to_string(of.factor) << '\n';
        }
    }
    return kExitOk;
}

int cmd_selftest(const Flags& flags, std::ostream& out) {
    if (flags.qmax >= gf::kMaxModulus) throw UsageError("qmax must be below 2^31");
    check_n(flags.nmax, "nmax");
    const auto start = std::chrono::steady_clock::now();
    const auto report = selftest::run({flags.qmax, flags.nmax, flags.seed, flags.oracle_max, flags.jobs});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (report.failure) {
        out << "selftest FAILED at " << *report.failure << '\n';
        return kExitVerifyFailed;
    }
    out << "selftest ok: pairs=" << report.pairs << " factors=" << report.factors
        << " oracle_checks=" << report.oracle_checks << " seconds=" << secs << '\n';
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Explicit factorization of x^n - 1 into binomials and trinomials over F_q", "xnfactor"};
    app.require_subcommand(1);
    Flags flags;

    auto add_qn = [&](CLI::App* sub) {
        sub->add_option("--q", flags.q, "prime modulus")->required();
        sub->add_option("--n", flags.n, "exponent n of x^n - 1")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", flags.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* factor = app.add_subcommand("factor", "factor x^n - 1 with the explicit enumeration");
    add_qn(factor);
    add_format(factor);
    factor->add_flag("--verify", flags.verify, "multiply back and run Rabin's test on every factor");
    factor->add_option("--max-factors", flags.max_factors, "print at most this many factors");
    factor->add_option("--jobs", flags.jobs, "threads for the verification pass")->check(CLI::PositiveNumber);
    factor->add_option("--seed", flags.seed, "oracle seed for unsupported diagnostics");

    auto* count = app.add_subcommand("count", "count irreducible factors by degree and shape");
    add_qn(count);
    add_format(count);

    auto* classify = app.add_subcommand("classify", "report which hypotheses (q, n) satisfies");
    add_qn(classify);
    add_format(classify);

    auto* cyclotomic = app.add_subcommand("cyclotomic", "print the cyclotomic polynomial Phi_d over F_q");
    cyclotomic->add_option("--q", flags.q, "prime modulus")->required();
    cyclotomic->add_option("--d", flags.d, "index d")->required();
    add_format(cyclotomic);

    auto* oracle = app.add_subcommand("oracle", "factor x^n - 1 with the general-purpose algorithm");
    add_qn(oracle);
    add_format(oracle);
    oracle->add_option("--seed", flags.seed, "PRNG seed for equal-degree splitting");

    auto* selftest = app.add_subcommand("selftest", "sweep all supported (q, n) and check every invariant");
    selftest->add_option("--qmax", flags.qmax, "largest prime q to test");
    selftest->add_option("--nmax", flags.nmax, "largest n to test");
    selftest->add_option("--seed", flags.seed, "oracle seed");
    selftest->add_option("--oracle-max", flags.oracle_max, "compare with the oracle for n up to this bound");
    selftest->add_option("--jobs", flags.jobs, "threads for the verification pass")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (factor->parsed()) return cmd_factor(flags, out);
        if (count->parsed()) return cmd_count(flags, out);
        if (classify->parsed()) return cmd_classify(flags, out);
        if (cyclotomic->parsed()) return cmd_cyclotomic(flags, out);
        if (oracle->parsed()) return cmd_oracle(flags, out);
        if (selftest->parsed()) return cmd_selftest(flags, out);
    } catch (const ModulusError& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadModulus;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"xnfactor"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace xnfactor::cli
