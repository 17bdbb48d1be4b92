#include "tiling/factored.hpp"
#include "tiling/matrix.hpp"
#include "tiling/rational.hpp"

#include <gtest/gtest.h>

using namespace tiling;

TEST(Rational, ParsesIntegersAndFractions) {
    EXPECT_EQ(parse_rational("7"), 7);
    EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational("+4/8"), make_rational(1, 2));
    EXPECT_EQ(to_fraction_string(parse_rational("123456789012345678901234567890/10")),
              "12345678901234567890123456789/1");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "1.5", "abc", "1/2/3"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    EXPECT_THROW(make_rational(1, 0), std::invalid_argument);
}

TEST(Rational, FormatsCanonically) {
    EXPECT_EQ(to_fraction_string(make_rational(4, -6)), "-2/3");
    EXPECT_EQ(to_fraction_string(Rational(5)), "5/1");
    EXPECT_EQ(to_display_string(Rational(5)), "5");
    EXPECT_EQ(to_display_string(make_rational(3, 9)), "1/3");
}

TEST(Rational, IntegerPowers) {
    EXPECT_EQ(pow(make_rational(2, 3), 3), make_rational(8, 27));
    EXPECT_EQ(pow(make_rational(2, 3), -2), make_rational(9, 4));
    EXPECT_EQ(pow(Rational(0), 0), 1);
    EXPECT_THROW(pow(Rational(0), -1), MathError);
    EXPECT_EQ(pow(Rational(2), 200).get_num().get_str(), "1606938044258990275541962092341162602522202993782792835301376");
}

TEST(Factored, ExtractsPrimesInDeclaredOrder) {
    FactoredValue f = factorize(Rational(144), {3, 2});
    EXPECT_EQ(f.unit(), 1);
    EXPECT_EQ(f.exponent(3), 2);
    EXPECT_EQ(f.exponent(2), 4);
    EXPECT_EQ(f.to_string(), "3^2 * 2^4 = 144");
}

TEST(Factored, KeepsUnfactoredRemainderAsUnit) {
    FactoredValue f = factorize(make_rational(50 * 11, 3), {2, 5});
    EXPECT_EQ(f.unit(), make_rational(11, 3));
    EXPECT_EQ(f.to_string(), "11/3 * 2^1 * 5^2 = 550/3");
    EXPECT_EQ(f.value(), make_rational(550, 3));
}

TEST(Factored, NegativeExponentsAndSupport) {
    FactoredValue f = factorize(make_rational(31, 100), {2, 5, 31});
    EXPECT_EQ(f.exponent(2), -2);
    EXPECT_EQ(f.exponent(5), -2);
    EXPECT_EQ(f.support(), (std::vector<Prime>{2, 5, 31}));
    EXPECT_EQ(f.factored_string(), "2^-2 * 5^-2 * 31^1");
}

TEST(Factored, EmptyFactorisationPrintsOne) {
    EXPECT_EQ(factorize(Rational(1), standard_primes()).to_string(), "1 = 1");
    EXPECT_EQ(FactoredValue(2, {{5, 0}}).to_string(), "2 = 2");
}

TEST(Factored, EqualityComparesValues) {
    EXPECT_EQ(FactoredValue(50, {}), FactoredValue(2, {{5, 2}}));
    EXPECT_FALSE(FactoredValue(50, {}) == FactoredValue(2, {{5, 1}}));
}

TEST(Factored, RejectsBadInput) {
    EXPECT_THROW(factorize(Rational(0), {2}), MathError);
    EXPECT_THROW(factorize(Rational(4), {2, 2}), std::invalid_argument);
    EXPECT_THROW(factorize(Rational(4), {1}), std::invalid_argument);
}

TEST(Matrix, LiteralsAndScaling) {
    RationalMatrix m{{1, 2}, {3, 4}};
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.scaled(make_rational(1, 2))(1, 1), 2);
    EXPECT_THROW((RationalMatrix{{1, 2}, {3}}), std::invalid_argument);
}
