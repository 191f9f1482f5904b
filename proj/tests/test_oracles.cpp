#include "radokit/search.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace radokit;

namespace {

void expect_agreement(const LinearEquation& eq, int r, i64 n_max, bool distinct)
{
    auto en = oracle::enumerate_colorings(eq, r, n_max, distinct);
    for (i64 n = 1; n <= n_max; ++n) {
        auto got = has_avoiding_coloring(eq, r, n, distinct);
        const auto& want = en.first_avoider[static_cast<std::size_t>(n)];
        ASSERT_NE(got.status, SearchStatus::budget_exceeded);
        ASSERT_EQ(got.status == SearchStatus::found, want.has_value())
            << eq.to_string() << " r=" << r << " n=" << n << " distinct=" << distinct;
        if (want) {
            EXPECT_EQ(got.coloring->coloring.colors(), *want) << eq.to_string() << " r=" << r << " n=" << n;
            EXPECT_TRUE(verify_certificate(eq, *got.coloring));
        }
    }
}

}  // namespace

TEST(OracleAgreement, TwoColorsOnPoolSample)
{
    auto pool = oracle::equation_pool();
    for (std::size_t i = 0; i < pool.size(); i += 7)
        expect_agreement(pool[i], 2, 10, false);
}

TEST(OracleAgreement, ThreeColorsOnPoolSample)
{
    auto pool = oracle::equation_pool();
    for (std::size_t i = 3; i < pool.size(); i += 31)
        expect_agreement(pool[i], 3, 8, false);
}

TEST(OracleAgreement, DistinctSolutions)
{
    auto pool = oracle::equation_pool();
    for (std::size_t i = 5; i < pool.size(); i += 23)
        expect_agreement(pool[i], 2, 10, true);
}

TEST(OracleAgreement, SchurThreeColorsUpToTwelve)
{
    expect_agreement(LinearEquation{1, 1, -1}, 3, 12, false);
}

TEST(OracleAgreement, EnumerationFindsKnownWitness)
{
    auto en = oracle::enumerate_colorings(LinearEquation{1, 1, -1}, 2, 5, false);
    EXPECT_EQ(*en.first_avoider[4], (std::vector<Color>{1, 2, 2, 1}));
    EXPECT_FALSE(en.first_avoider[5]);
}
