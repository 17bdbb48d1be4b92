#include "tiling/aztec.hpp"
#include "tiling/patterns.hpp"
#include "tiling/regions.hpp"
#include "tiling/verify.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace tiling;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

WeightPattern read_fixture(const std::string& name) {
    std::ifstream in(std::string(TILING_DATA_DIR) + "/" + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str());
}

void expect_pattern(const WeightPattern& actual, const RationalMatrix& expected) {
    ASSERT_EQ(actual.rows(), expected.rows());
    ASSERT_EQ(actual.cols(), expected.cols());
    for (std::size_t i = 0; i < expected.rows(); ++i)
        for (std::size_t j = 0; j < expected.cols(); ++j)
            EXPECT_EQ(actual(i, j), expected(i, j)) << "entry (" << i << "," << j << ")";
}

}  // namespace

TEST(Aztec, AllOnesCountsArePowersOfTwo) {
    for (std::size_t n = 0; n <= 16; ++n)
        EXPECT_EQ(evaluate(all_ones_pattern(), n), pow(Rational(2), static_cast<long>(n * (n + 1) / 2))) << n;
}

TEST(Aztec, SingleCellIsItsCellFactor) {
    WeightPattern p(RationalMatrix{{2, 3}, {5, 7}});
    EXPECT_EQ(evaluate(p, 1), 2 * 7 + 5 * 3);
}

TEST(Aztec, ReductionAgreesWithMatchingOracle) {
    Rng rng(11);
    for (int k = 0; k < 15; ++k) {
        WeightPattern p = random_pattern(rng, 4, 4);
        for (std::size_t n = 1; n <= 4; ++n) {
            WeightMatrix m = tile_pattern(p, n);
            EXPECT_EQ(evaluate(m), matching_gen_fn(build_aztec_graph(m))) << "case " << k << " n=" << n;
        }
    }
}

TEST(Aztec, NonPeriodicMatrixAgreesWithOracle) {
    Rng rng(3);
    WeightPattern p = random_pattern(rng, 8, 8);
    WeightMatrix m = tile_pattern(p, 4);
    EXPECT_EQ(evaluate(m), matching_gen_fn(build_aztec_graph(m)));
}

TEST(Aztec, DeltaChainOfB4) {
    WeightPattern b4 = s_family_pattern(4);
    WeightPattern d1 = delta_pattern(b4);
    expect_pattern(d1, {{1, q(3, 5), q(1, 5), 1},
                        {q(1, 5), q(1, 2), q(1, 2), q(3, 5)},
                        {q(3, 5), q(1, 2), q(1, 2), q(1, 5)},
                        {1, q(1, 5), q(3, 5), 1}});
    WeightPattern d2 = delta_pattern(d1);
    expect_pattern(d2, {{q(50, 31), q(50, 31), q(10, 31), q(30, 31)},
                        {q(50, 31), q(50, 31), q(30, 31), q(10, 31)},
                        {q(30, 31), q(10, 31), q(25, 31), q(25, 31)},
                        {q(10, 31), q(30, 31), q(25, 31), q(25, 31)}});
    WeightPattern d3 = delta_pattern(d2);
    expect_pattern(d3, {{q(31, 100), q(93, 100), q(31, 100), q(31, 100)},
                        {q(31, 100), q(31, 50), q(31, 50), q(93, 100)},
                        {q(93, 100), q(31, 50), q(31, 50), q(31, 100)},
                        {q(31, 100), q(31, 100), q(93, 100), q(31, 100)}});
    EXPECT_EQ(delta_pattern(d3), b4.scaled(q(40, 31)));
    EXPECT_EQ(delta_pattern(b4, 4), b4.scaled(q(40, 31)));
}

TEST(Aztec, DeltaChainOfTriangularPattern) {
    WeightPattern a = tri_pattern();
    WeightPattern d1 = delta_pattern(a);
    expect_pattern(d1, {{q(2, 3), 2, 2, q(2, 3)},
                        {q(2, 3), q(2, 3), q(2, 3), q(2, 3)},
                        {q(2, 3), q(2, 3), q(4, 3), 0},
                        {q(2, 3), 2, 0, q(4, 3)}});
    WeightPattern d2 = delta_pattern(d1);
    expect_pattern(d2, {{q(3, 8), q(3, 8), q(9, 8), q(9, 8)},
                        {q(3, 8), q(3, 4), 0, q(9, 8)},
                        {q(3, 8), 0, q(3, 4), q(3, 8)},
                        {q(3, 8), q(3, 8), q(3, 8), q(3, 8)}});
    WeightPattern d3 = delta_pattern(d2);
    expect_pattern(d3, {{q(8, 9), q(8, 9), q(8, 9), q(8, 9)},
                        {q(8, 3), q(8, 9), q(8, 9), q(8, 3)},
                        {q(8, 3), q(8, 9), q(16, 9), 0},
                        {q(8, 9), q(8, 9), 0, q(16, 9)}});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(cell_factor(d3.entries(), i, j), q(256, 81));
    EXPECT_EQ(delta_pattern(d3), a.scaled(q(9, 16)));
}

TEST(Aztec, TriangularChainEntryEightThirdsBreaksPeriodicity) {
    RationalMatrix alt{{q(8, 9), q(8, 9), q(8, 9), q(8, 9)},
                       {q(8, 3), q(8, 9), q(8, 9), q(8, 3)},
                       {q(8, 3), q(8, 3), q(16, 9), 0},
                       {q(8, 9), q(8, 9), 0, q(16, 9)}};
    EXPECT_EQ(cell_factor(alt, 1, 0), q(128, 27));
    EXPECT_NE(delta_pattern(WeightPattern(alt)), tri_pattern().scaled(q(9, 16)));
}

TEST(Aztec, StanleyProductMatchesReduction) {
    Rng rng(5);
    for (std::size_t n = 1; n <= 6; ++n)
        for (int k = 0; k < 3; ++k) {
            WeightPattern s = random_pattern(rng, 2, 2 * n);
            EXPECT_EQ(stanley_eval(s, n), evaluate(s, n)) << "n=" << n;
        }
    EXPECT_THROW(stanley_eval(random_pattern(rng, 2, 4), 3), std::invalid_argument);
}

TEST(Aztec, StanleyProductIsNotSymmetricInSwappedIndices) {
    // The factor x_i w_j + y_j t_i differs from x_i w_j + y_i t_j once n >= 2.
    WeightPattern s(RationalMatrix{{1, 2, 3, 4}, {5, 6, 7, 8}});
    Rational swapped = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j) swapped *= s(0, 2 * i) * s(1, 2 * j + 1) + s(0, 2 * i + 1) * s(1, 2 * j);
    EXPECT_NE(swapped, evaluate(s, 2));
    EXPECT_EQ(stanley_eval(s, 2), evaluate(s, 2));
}

TEST(Aztec, ScalingContracts) {
    Rng rng(9);
    WeightPattern p = random_pattern(rng, 4, 4);
    for (std::size_t n = 1; n <= 4; ++n) {
        WeightMatrix m = tile_pattern(p, n);
        const Rational base = evaluate(m);
        const long ln = static_cast<long>(n);
        for (const Rational& t : {q(1, 3), q(2), q(7, 5)}) {
            for (Axis axis : {Axis::rows, Axis::columns}) {
                for (std::size_t part = 0; part <= n; ++part)
                    EXPECT_EQ(base, pow(t, -ln) * evaluate(scale_separator_part(m, axis, part, t)));
                for (std::size_t part = 0; part < n; ++part)
                    EXPECT_EQ(base, pow(t, -ln - 1) * evaluate(scale_pair_part(m, axis, part, t)));
            }
            for (std::size_t i = 0; i <= n; ++i)
                for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(evaluate(scale_cell_block(m, i, j, t)), t * base);
        }
    }
}

TEST(Aztec, ScalingRejectsBadArguments) {
    WeightMatrix m = tile_pattern(all_ones_pattern(), 2);
    EXPECT_THROW(scale_separator_part(m, Axis::rows, 3, 2), std::out_of_range);
    EXPECT_THROW(scale_pair_part(m, Axis::rows, 2, 2), std::out_of_range);
    EXPECT_THROW(scale_cell_block(m, 0, 2, 2), std::out_of_range);
    EXPECT_THROW(scale_cell_block(m, 0, 0, 0), std::invalid_argument);
}

TEST(Aztec, ZeroCellFactorReportsPosition) {
    WeightPattern z = read_fixture("zero_cell.txt");
    try {
        evaluate(z, 3);
        FAIL() << "expected ZeroCellFactor";
    } catch (const ZeroCellFactor& e) {
        EXPECT_EQ(e.order(), 3u);
        EXPECT_EQ(e.cell_row(), 0u);
        EXPECT_EQ(e.cell_col(), 0u);
    }
}

TEST(Aztec, TriangularPatternSurvivesZeros) {
    EXPECT_EQ(evaluate(tri_pattern(), 2), matching_gen_fn(build_aztec_graph(tile_pattern(tri_pattern(), 2))));
}

TEST(Aztec, PatternTextRoundTrip) {
    WeightPattern b4 = read_fixture("b4.txt");
    EXPECT_EQ(b4, s_family_pattern(4));
    EXPECT_EQ(parse_pattern(to_text(b4)), b4);
    EXPECT_EQ(read_fixture("all_ones.txt"), all_ones_pattern());
}

TEST(Aztec, PatternParserRejectsMalformedInput) {
    EXPECT_THROW(parse_pattern(""), std::invalid_argument);
    EXPECT_THROW(parse_pattern("2 2\n1 1\n1"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("2 2\n1 1\n1 1 9"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("1 2\n1 1"), std::invalid_argument);
    EXPECT_THROW(parse_pattern("2 2\n1 x\n1 1"), std::invalid_argument);
}

TEST(Aztec, TraceRecordsEveryStep) {
    WeightMatrix m = tile_pattern(s_family_pattern(4), 4);
    ReductionTrace t = trace_reduction(m);
    ASSERT_EQ(t.steps.size(), 4u);
    Rational product = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(t.steps[k].order, 4 - k);
        EXPECT_EQ(t.steps[k].snapshot.size(), 16u);
        product *= t.steps[k].factor;
    }
    EXPECT_EQ(t.value, product);
    EXPECT_EQ(t.value, evaluate(m));
    EXPECT_EQ(t.steps[0].snapshot, snapshot_hash(m.entries()));
    EXPECT_NE(t.steps[0].snapshot, t.steps[1].snapshot);
}

TEST(Aztec, OrderZeroCannotBeReduced) {
    EXPECT_THROW(reduce_step(WeightMatrix(RationalMatrix(0, 0))), std::invalid_argument);
    EXPECT_EQ(evaluate(WeightMatrix(RationalMatrix(0, 0))), 1);
}
