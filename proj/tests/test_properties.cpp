#include "properties.hpp"

#include <gtest/gtest.h>

using namespace qgenus::test;

namespace {
constexpr int kCases = 10000;
}

TEST(Properties, SymbolBilinearity)
{
    const auto r = symbol_bilinearity(kCases, 101);
    EXPECT_EQ(r.cases, kCases);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, WildSymbolTwistStability)
{
    const auto r = wild_symbol_twist_stability(kCases, 102);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, NormMultiplicativity)
{
    const auto r = norm_multiplicativity(kCases, 103);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Properties, LambdaValuationAdditivity)
{
    const auto r = lambda_valuation_additivity(kCases, 104);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}
