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

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "xnfactor/cyclofactor.hpp"

namespace xnfactor::cyclo {
namespace {

std::vector<std::string> strings(const Factorization& f) {
    std::vector<std::string> out;
    for (const auto& rec : f.factors) out.push_back(poly::to_string(rec.to_poly(f.q())));
    return out;
}

std::vector<poly::DensePoly> polys(const Factorization& f) {
    std::vector<poly::DensePoly> out;
    for (const auto& rec : f.factors) out.push_back(rec.to_poly(f.q()));
    return out;
}

Factorization factor_any(const gf::FieldCtx& field, std::optional<gf::QuadExtCtx> ext, u64 n) {
    return classify(field, n).kind == Case::Case2 ? factor_case2(*ext, n) : factor_case1(field, n);
}

TEST(ClassifyTest, Examples) {
    EXPECT_EQ(classify(gf::make_field(5), 8).kind, Case::Case1);
    EXPECT_EQ(classify(gf::make_field(3), 8).kind, Case::Case2);
    const auto un = classify(gf::make_field(5), 3);
    EXPECT_EQ(un.kind, Case::Unsupported);
    EXPECT_EQ(un.reason, "rad(n)=3 does not divide q-1=4");
    EXPECT_EQ(classify(gf::make_field(3), 4).kind, Case::Case1);
    EXPECT_EQ(classify(gf::make_field(7), 24).kind, Case::Case2);
    EXPECT_EQ(classify(gf::make_field(7), 7).kind, Case::Unsupported);
    EXPECT_THROW(classify(gf::make_field(7), 0), std::domain_error);
}

TEST(BinomialCriteriaTest, IrreducibilityExamples) {
    const auto f5 = gf::make_field(5);
    EXPECT_TRUE(binomial_is_irreducible(f5, 2, {2}));
    EXPECT_FALSE(binomial_is_irreducible(f5, 2, {4}));
    EXPECT_FALSE(binomial_is_irreducible(gf::make_field(3), 4, {2}));
    EXPECT_TRUE(binomial_is_irreducible(f5, 1, {3}));
    EXPECT_THROW(binomial_is_irreducible(f5, 2, {0}), std::domain_error);
}

TEST(BinomialCriteriaTest, DivisibilityExamples) {
    const auto f5 = gf::make_field(5);
    EXPECT_TRUE(binomial_divides_xn1(f5, 2, {2}, 8));
    EXPECT_FALSE(binomial_divides_xn1(f5, 2, {2}, 4));
    for (u64 n = 1; n < 30; ++n) EXPECT_TRUE(binomial_divides_xn1(gf::make_field(11), 1, {1}, n));
    EXPECT_FALSE(binomial_divides_xn1(f5, 3, {1}, 8));
    EXPECT_THROW(binomial_divides_xn1(f5, 2, {0}, 8), std::domain_error);
}

TEST(BinomialCriteriaTest, AgreeWithPolynomialArithmeticOnSmallGrid) {
    for (u64 q : {3, 5, 7, 11, 13}) {
        const auto ctx = gf::make_field(q);
        for (u64 n = 1; n <= 48; ++n) {
            const auto xn1 = poly::xn_minus_1(n, ctx);
            for (u64 t : numutil::divisors(n)) {
                for (u64 a = 1; a < q; ++a) {
                    const auto b = poly::DensePoly::binomial(q, t, a);
                    ASSERT_EQ(binomial_divides_xn1(ctx, t, {a}, n), poly::rem(xn1, b).is_zero());
                    ASSERT_EQ(binomial_is_irreducible(ctx, t, {a}), poly::is_irreducible(b));
                }
            }
        }
    }
}

TEST(SplitBinomialTest, Examples) {
    const auto [lo3, hi3] = split_reducible_binomial(gf::make_field(3), 1, {2});
    EXPECT_EQ(poly::to_string(lo3.to_poly(3)), "x^2 + 2x + 2");  // x^2 - x + 2
    EXPECT_EQ(poly::to_string(hi3.to_poly(3)), "x^2 + x + 2");
    const auto [lo7, hi7] = split_reducible_binomial(gf::make_field(7), 1, {3});
    EXPECT_EQ(lo7.b, 2u);
    EXPECT_EQ(lo7.c, 2u);
    EXPECT_EQ(hi7.b, 5u);
    const auto [lo, hi] = split_reducible_binomial(gf::make_field(3), 2, {2});
    EXPECT_EQ(lo.t, 2u);
    EXPECT_EQ(lo.b, lo3.b);
    EXPECT_EQ(lo.c, lo3.c);
}

TEST(SplitBinomialTest, ProductAndRelations) {
    for (u64 q : {3, 7, 11, 19, 23, 43}) {
        const auto ctx = gf::make_field(q);
        for (u64 a = 1; a < q; ++a) {
            if (ctx.is_square({a})) {
                EXPECT_THROW(split_reducible_binomial(ctx, 1, {a}), std::domain_error);
                continue;
            }
            for (u64 s = 1; s <= 3; ++s) {
                const auto [lo, hi] = split_reducible_binomial(ctx, s, {a});
                ASSERT_EQ(ctx.mul({lo.c}, {lo.c}), ctx.neg({a}));
                ASSERT_EQ(ctx.mul({lo.b}, {lo.b}), ctx.add({lo.c}, {lo.c}));
                ASSERT_EQ(poly::mul(lo.to_poly(q), hi.to_poly(q)), poly::DensePoly::binomial(q, 4 * s, a));
            }
        }
    }
    EXPECT_THROW(split_reducible_binomial(gf::make_field(5), 1, {2}), std::domain_error);
}

TEST(FactorCase1Test, Examples) {
    const auto f58 = factor_case1(gf::make_field(5), 8);
    EXPECT_EQ(f58.params, (std::variant<Case1Params, Case2Params>{Case1Params{2, 1}}));
    EXPECT_EQ(strings(f58), (std::vector<std::string>{"x + 1", "x + 2", "x + 3", "x + 4", "x^2 + 2", "x^2 + 3"}));

    const auto f79 = factor_case1(gf::make_field(7), 9);
    EXPECT_EQ(f79.params, (std::variant<Case1Params, Case2Params>{Case1Params{3, 2}}));
    EXPECT_EQ(strings(f79), (std::vector<std::string>{"x + 3", "x + 5", "x + 6", "x^3 + 3", "x^3 + 5"}));
    EXPECT_EQ(poly::mul(poly::DensePoly::binomial(7, 3, 2), poly::DensePoly::binomial(7, 3, 4)),
              poly::cyclotomic_poly(9, gf::make_field(7)));

    const auto f54 = factor_case1(gf::make_field(5), 4);
    EXPECT_EQ(strings(f54), (std::vector<std::string>{"x + 1", "x + 2", "x + 3", "x + 4"}));

    EXPECT_THROW(factor_case1(gf::make_field(3), 8), HypothesisError);
    EXPECT_THROW(factor_case1(gf::make_field(5), 3), HypothesisError);
}

TEST(FactorCase1Test, Census) {
    const auto c58 = count_case1(gf::make_field(5), 8);
    EXPECT_EQ(c58.total, 6u);
    EXPECT_EQ(c58.counts, (std::map<CensusKey, u64>{{{1, Shape::Binomial}, 4}, {{2, Shape::Binomial}, 2}}));
    const auto c79 = count_case1(gf::make_field(7), 9);
    EXPECT_EQ(c79.total, 5u);
    EXPECT_EQ(c79.counts, (std::map<CensusKey, u64>{{{1, Shape::Binomial}, 3}, {{3, Shape::Binomial}, 2}}));
    const auto c1312 = count_case1(gf::make_field(13), 12);
    EXPECT_EQ(c1312.total, 12u);
    EXPECT_EQ(c1312.counts.size(), 1u);
    EXPECT_THROW(count_case1(gf::make_field(3), 16), HypothesisError);
}

TEST(BuildRtTest, Examples) {
    const auto e3 = gf::make_quad_ext(gf::make_field(3));
    EXPECT_EQ(build_Rt(e3, 8, 1), (std::vector<u64>{1, 2, 5}));
    EXPECT_EQ(build_Rt(e3, 16, 2), (std::vector<u64>{1, 5}));
    const auto e7 = gf::make_quad_ext(gf::make_field(7));
    EXPECT_EQ(build_Rt(e7, 8, 1), (std::vector<u64>{1, 2, 3}));
    EXPECT_THROW(build_Rt(e3, 8, 2), HypothesisError);
    EXPECT_THROW(build_Rt(e3, 4, 1), HypothesisError);
    // Multiples of the primes of t are excluded: q = 7, n = 72, t = 3.
    for (u64 u : build_Rt(e7, 72, 3)) EXPECT_NE(u % 3, 0u);
}

TEST(FactorCase2Test, Examples) {
    const auto e3 = gf::make_quad_ext(gf::make_field(3));
    const auto f38 = factor_case2(e3, 8);
    EXPECT_EQ(f38.params, (std::variant<Case1Params, Case2Params>{Case2Params{1, 1, 1, 2}}));
    EXPECT_EQ(strings(f38), (std::vector<std::string>{"x + 1", "x + 2", "x^2 + 1", "x^2 + x + 2", "x^2 + 2x + 2"}));
    ASSERT_TRUE(f38.factors[2].degenerate_from_trinomial);
    EXPECT_EQ(f38.factors[2].shape, Shape::Binomial);

    const auto e7 = gf::make_quad_ext(gf::make_field(7));
    const auto f78 = factor_case2(e7, 8);
    EXPECT_EQ(f78.params, (std::variant<Case1Params, Case2Params>{Case2Params{1, 3, 6, 2}}));
    EXPECT_EQ(strings(f78), (std::vector<std::string>{"x + 1", "x + 6", "x^2 + 1", "x^2 + 3x + 1", "x^2 + 4x + 1"}));

    const auto f316 = factor_case2(e3, 16);
    ASSERT_EQ(f316.factors.size(), 7u);
    EXPECT_EQ(f316.factors[5].degree(), 4u);
    EXPECT_EQ(f316.factors[6].degree(), 4u);
    EXPECT_EQ(f316.factors[5].shape, Shape::Trinomial);
    const auto oracle = poly::oracle_factorize(poly::xn_minus_1(16, gf::make_field(3)), 1);
    ASSERT_EQ(oracle.size(), 7u);
    for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(oracle[i].factor, f316.factors[i].to_poly(3));

    EXPECT_THROW(factor_case2(e3, 4), HypothesisError);
    EXPECT_THROW(factor_case2(e7, 56), HypothesisError);
}

TEST(FactorCase2Test, Census) {
    const auto e3 = gf::make_quad_ext(gf::make_field(3));
    const auto c38 = count_case2(e3, 8);
    EXPECT_EQ(c38.total, 5u);
    EXPECT_EQ(c38.counts, (std::map<CensusKey, u64>{{{1, Shape::Binomial}, 2},
                                                    {{2, Shape::Binomial}, 1},
                                                    {{2, Shape::Trinomial}, 2}}));
    const auto c316 = count_case2(e3, 16);
    EXPECT_EQ(c316.total, 7u);
    EXPECT_EQ(c316.counts, (std::map<CensusKey, u64>{{{1, Shape::Binomial}, 2},
                                                     {{2, Shape::Binomial}, 1},
                                                     {{2, Shape::Trinomial}, 2},
                                                     {{4, Shape::Trinomial}, 2}}));
    EXPECT_EQ(count_case2(gf::make_quad_ext(gf::make_field(7)), 8).total, 5u);
}

TEST(DispatchTest, Outcomes) {
    const auto ok = factor_xn_minus_1(5, 8);
    ASSERT_TRUE(std::holds_alternative<Factorization>(ok));
    EXPECT_EQ(std::get<Factorization>(ok).kind, Case::Case1);

    const auto two = factor_xn_minus_1(3, 8);
    ASSERT_TRUE(std::holds_alternative<Factorization>(two));
    EXPECT_EQ(std::get<Factorization>(two).factors.size(), 5u);
    EXPECT_EQ(std::get<Factorization>(two).alpha, (gf::Fq2Elem{1, 1}));

    const auto un = factor_xn_minus_1(5, 3);
    ASSERT_TRUE(std::holds_alternative<Unsupported>(un));
    const auto& u = std::get<Unsupported>(un);
    EXPECT_EQ(u.reason, "rad(n)=3 does not divide q-1=4");
    ASSERT_TRUE(u.diagnostic.has_value());
    const auto trinomial = poly::DensePoly(5, {1, 1, 1});
    EXPECT_TRUE(std::any_of(u.diagnostic->begin(), u.diagnostic->end(),
                            [&](const poly::OracleFactor& of) { return of.factor == trinomial; }));

    const auto big = factor_xn_minus_1(5, 3000, {512, 1});
    EXPECT_FALSE(std::get<Unsupported>(big).diagnostic.has_value());

    EXPECT_THROW(factor_xn_minus_1(15, 8), std::domain_error);
    EXPECT_THROW(factor_xn_minus_1(5, 0), std::domain_error);
}

TEST(InvariantTest, ReconstructionIrreducibilityCensus) {
    for (u64 q : {3, 5, 7, 11, 13, 19}) {
        const auto field = gf::make_field(q);
        std::optional<gf::QuadExtCtx> ext;
        if (q % 4 == 3) ext = gf::make_quad_ext(field);
        for (u64 n = 1; n <= 300; ++n) {
            const auto tag = classify(field, n);
            if (tag.kind == Case::Unsupported) continue;
            const auto f = factor_any(field, ext, n);
            const auto v = verify(f);
            ASSERT_TRUE(v.ok()) << "q=" << q << " n=" << n;
            u64 degrees = 0;
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                const auto& rec = f.factors[i];
                degrees += rec.degree();
                if (i) ASSERT_TRUE(canonical_less(f.factors[i - 1], rec, q));
                if (rec.shape == Shape::Trinomial) ASSERT_NE(rec.b, 0u);
                if (rec.degenerate_from_trinomial) {
                    ASSERT_EQ(rec.shape, Shape::Binomial);
                    ASSERT_EQ(rec.t % 2, 0u);
                    ASSERT_EQ((rec.t / 2) % 2, 1u);
                }
                if (rec.shape == Shape::Binomial) {
                    ASSERT_TRUE(binomial_is_irreducible(field, rec.t, {rec.a}));
                    ASSERT_TRUE(binomial_divides_xn1(field, rec.t, {rec.a}, n));
                }
            }
            ASSERT_EQ(degrees, n);
            const auto formula = tag.kind == Case::Case2 ? count_case2(*ext, n) : count_case1(field, n);
            ASSERT_EQ(formula, tally(f)) << "q=" << q << " n=" << n;
            ASSERT_EQ(formula.total, formula.sum_of_entries());
        }
    }
}

TEST(InvariantTest, GeneratorIndependence) {
    for (u64 q : {3, 5, 7, 11, 13, 19, 31}) {
        const auto field = gf::make_field(q);
        const bool has_second = q != 3;
        std::optional<gf::QuadExtCtx> ext, ext_alt;
        if (q % 4 == 3) {
            ext = gf::make_quad_ext(field);
            ext_alt = gf::make_quad_ext(field, 1);
        }
        for (u64 n = 1; n <= 256; ++n) {
            const auto tag = classify(field, n);
            if (tag.kind == Case::Case1 && has_second) {
                const auto alt = gf::make_field(q, 1);
                ASSERT_NE(alt.theta(), field.theta());
                ASSERT_EQ(polys(factor_case1(field, n)), polys(factor_case1(alt, n))) << q << " " << n;
            } else if (tag.kind == Case::Case2) {
                ASSERT_EQ(polys(factor_case2(*ext, n)), polys(factor_case2(*ext_alt, n))) << q << " " << n;
            }
        }
    }
}

TEST(InvariantTest, ParallelVerificationMatchesSerial) {
    const auto f = std::get<Factorization>(factor_xn_minus_1(13, 1728));
    const auto serial = verify(f, 1);
    const auto parallel = verify(f, 4);
    EXPECT_TRUE(serial.ok());
    EXPECT_EQ(serial.irreducible, parallel.irreducible);
    EXPECT_EQ(serial.product_matches, parallel.product_matches);
}

TEST(InvariantTest, VerifyCatchesCorruption) {
    auto f = std::get<Factorization>(factor_xn_minus_1(5, 8));
    f.factors.back().a = 4;  // x^2 - 4 = (x - 2)(x + 2)
    const auto v = verify(f);
    EXPECT_FALSE(v.product_matches);
    EXPECT_FALSE(v.irreducible.back());
    EXPECT_FALSE(v.ok());
}

}  // namespace
}  // namespace xnfactor::cyclo
