#include "tiling/closed_forms.hpp"
#include "tiling/verify.hpp"

#include <gtest/gtest.h>

using namespace tiling;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

NParams random_n_params(Rng& rng) {
    NParams p;
    for (Rational* r : {&p.a, &p.b, &p.c, &p.d, &p.x, &p.y, &p.z, &p.t}) *r = random_rational(rng);
    return p;
}

}  // namespace

TEST(Fortress, YangCountsForSmallOrders) {
    const long expected[] = {0, 1, 5, 50, 625, 15625, 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5};
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(yang_fortress(n).value(), expected[n]) << n;
    EXPECT_EQ(yang_fortress(3).to_string(), "2 * 5^2 = 50");
    EXPECT_THROW(yang_fortress(0), std::invalid_argument);
}

TEST(Fortress, AllOnesCompositionMatchesYang) {
    for (std::size_t m = 1; m <= 40; ++m)
        EXPECT_EQ(fortress_count(Composition::ones(m), FortressVariant::plain), yang_fortress(static_cast<long>(m)))
            << m;
}

TEST(Fortress, CountEqualsPrefactorTimesReduction) {
    for (long n = 1; n <= 6; ++n)
        for (const auto& d : Composition::all_of(n))
            for (auto v : {FortressVariant::plain, FortressVariant::bar})
                EXPECT_EQ(fortress_count(d, v).value(),
                          fortress_prefactor(d, v).value() * evaluate(fortress_pattern(v, d), static_cast<std::size_t>(n)))
                    << d.to_string();
}

TEST(Fortress, PrintedFormOfSmallExamples) {
    Composition d({1, 1, 1});
    EXPECT_EQ(fortress_count(d, FortressVariant::plain).to_string(), "2^1 * 5^2 = 50");
    EXPECT_EQ(fortress_count(d, FortressVariant::bar).value(), 25);
}

TEST(Fortress, WeightedRowFormula) {
    Rng rng(21);
    for (std::size_t n = 1; n <= 7; ++n)
        for (int k = 0; k < 3; ++k) {
            auto a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n),
                 d = random_vector(rng, n);
            EXPECT_EQ(weighted_rows_formula(a, b, c, d), evaluate(rows_pattern(a, b, c, d), n)) << n;
        }
}

TEST(Fortress, TwoParameterPatternAndGeneratingFunction) {
    Rng rng(22);
    for (long n = 1; n <= 5; ++n)
        for (const auto& d : Composition::all_of(n)) {
            Rational a = random_rational(rng), b = random_rational(rng);
            EXPECT_EQ(fortress_pattern_formula(a, b, d), evaluate(fortress_pattern(a, b, d), static_cast<std::size_t>(n)))
                << d.to_string();
        }
    for (long n = 1; n <= 4; ++n)
        for (const auto& d : Composition::all_of(n))
            EXPECT_EQ(fortress_gen_fn(d, q(1, 2), 1), fortress_count(d, FortressVariant::plain).value()) << d.to_string();
}

TEST(Zigzag, ClosedFormMatchesReduction) {
    for (bool bar : {false, true})
        for (long n = 0; n <= 16; ++n)
            EXPECT_EQ(zigzag_closed_form(n, bar).value(),
                      pow(Rational(2), zigzag_gamma(n, bar)) * evaluate(zigzag_pattern(bar), static_cast<std::size_t>(n)))
                << (bar ? "bar " : "") << n;
}

TEST(Zigzag, SmallValues) {
    EXPECT_EQ(zigzag_count(4, false).value(), 486);
    EXPECT_EQ(zigzag_count(4, false).to_string(), "2 * 3^5 = 486");
    EXPECT_EQ(zigzag_count(0, false).value(), 1);
    for (long m = 0; m <= 6; ++m) EXPECT_EQ(zigzag_count(3 * m, true), zigzag_count(3 * m, false)) << m;
}

TEST(Zigzag, RecurrenceAgreesWithReduction) {
    for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{q(1, 2), 1}, {2, 3}, {q(5, 7), q(3, 4)}})
        EXPECT_TRUE(zig_recurrence_discrepancies(a, b, 9).empty());
    EXPECT_THROW(zig_exponents(2, false), std::invalid_argument);
    ZigExponents plain = zig_exponents(5, false), bar = zig_exponents(5, true);
    EXPECT_EQ(plain.x, bar.y);
    EXPECT_EQ(plain.y, bar.x);
}

TEST(Blum, SmallValues) {
    const long expected[] = {0, 1, 2, 6, 6, 6, 6, 27, 486};
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(blum_value(n).value(), expected[n]) << n;
}

TEST(Blum, CoverageOfAllIndices) {
    for (long n = 1; n <= 200; ++n) {
        auto route = blum_coverage(n);
        ASSERT_TRUE(route.has_value()) << n;
        EXPECT_EQ(route->extended, n == 1) << n;
        EXPECT_EQ(route->n, n);
    }
    EXPECT_FALSE(blum_coverage(0).has_value());
    EXPECT_EQ(blum_coverage(17)->zig_order, 7);
    EXPECT_FALSE(blum_coverage(17)->bar);
}

TEST(Blum, ThirtyStepRecurrence) {
    for (long n = 31; n <= 61; ++n) EXPECT_TRUE(blum_recurrence_check(n)) << n;
    EXPECT_THROW(blum_x(30), std::invalid_argument);
}

TEST(Powers, FourParameterFormula) {
    Rng rng(31);
    for (long n = 0; n <= 9; ++n)
        for (int k = 0; k < 2; ++k) {
            Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng),
                     d = random_rational(rng);
            EXPECT_EQ(abcd_formula(a, b, c, d, n), evaluate(abcd_pattern(a, b, c, d), static_cast<std::size_t>(n))) << n;
        }
}

TEST(Powers, SRegionCountsAndPrintedValues) {
    for (int f = 1; f <= 4; ++f)
        for (long n = 0; n <= 12; ++n) EXPECT_NO_THROW(s_region_count(f, n)) << f << " " << n;
    EXPECT_EQ(s_region_count(1, 1).value(), 5);
    EXPECT_EQ(s_region_count(1, 2).value(), 37);
    EXPECT_EQ(s_region_count(4, 2).value(), 31);
    EXPECT_THROW(s_region_closed_form(5, 1), std::invalid_argument);
}

TEST(Powers, QRegionCountsAndPrintedValues) {
    for (long n = 0; n <= 12; ++n) EXPECT_NO_THROW(q_count(n)) << n;
    EXPECT_EQ(q_count(2).value(), 29);
    EXPECT_EQ(q_count(3).value(), 37845);
}

TEST(Powers, BlockPatternFormula) {
    Rng rng(32);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int k = 0; k < 3; ++k) {
            auto a = random_vector(rng, n), b = random_vector(rng, n), c = random_vector(rng, n),
                 d = random_vector(rng, n);
            EXPECT_EQ(blockC_formula(a, b, c, d), evaluate(block_c_pattern(a, b, c, d), n)) << n;
        }
    EXPECT_THROW(blockC_formula({1}, {1, 2}, {1}, {1}), std::invalid_argument);
}

TEST(NPattern, ValuesMatchReduction) {
    Rng rng(41);
    for (int k = 0; k < 4; ++k) {
        NParams p = random_n_params(rng);
        for (long m = 0; m <= 11; ++m) EXPECT_EQ(n_pattern_value(p, m), evaluate(n_pattern(p), static_cast<std::size_t>(m))) << m;
    }
}

TEST(NPattern, PrintedInitialValuesDisagreeOnlyAtSixAndSeven) {
    Rng rng(42);
    for (int k = 0; k < 3; ++k) {
        auto ds = n_pattern_discrepancies(random_n_params(rng));
        ASSERT_EQ(ds.size(), 2u);
        EXPECT_EQ(ds[0].index, 6);
        EXPECT_EQ(ds[1].index, 7);
        EXPECT_NE(ds[0].printed, ds[0].computed);
    }
}

TEST(Triangular, CountsAndPrintedValues) {
    EXPECT_EQ(tri_count(1).value(), 144);
    EXPECT_EQ(tri_count(1).to_string(), "3^2 * 2^4 = 144");
    EXPECT_EQ(tri_count(2).value(), 373248);
    for (long n = 1; n <= 6; ++n) EXPECT_NO_THROW(tri_count(n)) << n;
    EXPECT_THROW(tri_count(0), std::invalid_argument);
}

TEST(Structure, FactoredOutputsUseExpectedPrimes) {
    for (long n = 1; n <= 20; ++n) {
        FactoredValue y = yang_fortress(n);
        EXPECT_TRUE(y.unit() == 1 || y.unit() == 2);
        EXPECT_EQ(factorize(y.value(), {5}).unit(), y.unit());
    }
    for (bool bar : {false, true})
        for (long n = 0; n <= 20; ++n) {
            FactoredValue z = zigzag_count(n, bar);
            EXPECT_TRUE(z.unit() == 1 || z.unit() == 2);
            EXPECT_EQ(factorize(z.value(), {3}).unit(), z.unit());
        }
    for (long n = 0; n <= 20; n += 4) {
        FactoredValue v = q_count(n);
        EXPECT_EQ(v.unit(), 1);
        EXPECT_EQ(v.exponent(3), v.exponent(29));
    }
}

TEST(CrossCheck, MismatchIsAMathError) {
    EXPECT_THROW(detail::cross_check("x", 1, 2), CrossCheckError);
    EXPECT_THROW(detail::cross_check("x", 1, 2), MathError);
}
