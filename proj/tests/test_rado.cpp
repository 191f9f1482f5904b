#include "radokit/rado.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace radokit;

TEST(RadoCondition, Examples)
{
    EXPECT_EQ(rado_condition(LinearEquation{1, 1, -1})->indices, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(rado_condition(LinearEquation{3, -1, -1, -1})->indices, (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_FALSE(rado_condition(LinearEquation{1, 1, -3}));
    EXPECT_EQ(rado_condition(LinearEquation{2, -2, 1})->indices, (std::vector<std::size_t>{1, 2}));
}

TEST(RadoCondition, MatchesSubsetEnumerationOnPool)
{
    for (const auto& eq : oracle::equation_pool()) {
        auto got = rado_condition(eq);
        auto want = oracle::least_zero_subset(eq);
        ASSERT_EQ(got.has_value(), want.has_value()) << eq.to_string();
        if (got) {
            EXPECT_EQ(got->indices, *want) << eq.to_string();
            EXPECT_TRUE(verify_certificate(eq, *got));
        }
    }
}

TEST(RadoCondition, LongEquationsUseMeetInTheMiddle)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> mag(1, 40);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<i64> c;
        for (int i = 0; i < 30; ++i)
            c.push_back(rng() % 2 ? mag(rng) : -mag(rng) * 1000);  // mostly no zero sum
        if (trial % 3 == 0) {
            c[28] = 5;
            c[29] = -5;
        }
        LinearEquation eq(c);
        auto got = rado_condition(eq);
        // the greedy prefix search must agree with a direct check of its answer
        if (got) {
            EXPECT_TRUE(verify_certificate(eq, *got));
        }
        if (trial % 3 == 0) {
            ASSERT_TRUE(got.has_value());
        }
    }
}

TEST(RadoCondition, MeetInTheMiddleAgreesWithDfsOnSmallInputs)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<i64> c;
        auto k = 1 + rng() % 12;
        for (std::size_t i = 0; i < k; ++i) {
            i64 v = 1 + static_cast<i64>(rng() % 9);
            c.push_back(rng() % 2 ? v : -v);
        }
        auto mitm = detail::rado_mitm(c);
        auto want = oracle::least_zero_subset(LinearEquation(c));
        ASSERT_EQ(mitm.has_value(), want.has_value());
        if (mitm) {
            EXPECT_EQ(*mitm, *want);
        }
    }
}

TEST(Necessity, BaseFiveColoringAvoidsXPlusYEqualsThreeZ)
{
    LinearEquation eq{1, 1, -3};
    auto nc = necessity_coloring(eq, 5, Window{1, 500});
    EXPECT_EQ(nc.coloring.num_colors(), 4);
    EXPECT_EQ(nc.verified_bound, 500);
    // independent nested-loop check over every x, y; z is forced
    const auto& col = nc.coloring;
    for (i64 x = 1; x <= 500; ++x)
        for (i64 y = 1; y <= 500; ++y)
            if ((x + y) % 3 == 0 && (x + y) / 3 <= 500) {
                i64 z = (x + y) / 3;
                ASSERT_FALSE(col.color_of(x) == col.color_of(y) && col.color_of(y) == col.color_of(z))
                    << x << "," << y << "," << z;
            }
}

TEST(Necessity, AutoPrimeSkipsUnsuitablePrimes)
{
    LinearEquation eq{1, 1, -3};
    EXPECT_THROW(necessity_coloring(eq, 2, Window{1, 100}), unsuitable_prime_error);
    try {
        necessity_coloring(eq, 3, Window{1, 100});
        FAIL() << "p=3 should not work";
    } catch (const unsuitable_prime_error& e) {
        EXPECT_EQ(e.prime(), 3);
        Coloring col = digit_coloring(3, Window{1, 100});
        EXPECT_TRUE(verify_certificate(eq, e.counterexample(), &col));
    }
    EXPECT_EQ(auto_necessity_coloring(eq, Window{1, 300}).prime, 5);
}

TEST(Necessity, EquationWithoutPositiveSolutions)
{
    LinearEquation eq{2, 3};
    for (i64 p : {2, 3, 5, 7}) {
        auto nc = necessity_coloring(eq, p, Window{1, 200});
        EXPECT_EQ(nc.prime, p);
    }
}

TEST(Necessity, RegularEquationIsRejected)
{
    try {
        necessity_coloring(LinearEquation{1, 1, -1}, 2, Window{1, 10});
        FAIL();
    } catch (const partition_regular_error& e) {
        EXPECT_EQ(e.subset().indices, (std::vector<std::size_t>{1, 3}));
    }
    EXPECT_THROW(digit_coloring(4, Window{1, 10}), precondition_error);
}

TEST(Necessity, LastNonzeroDigit)
{
    EXPECT_EQ(last_nonzero_digit(10, 5), 2);   // 10 = 20_5
    EXPECT_EQ(last_nonzero_digit(7, 5), 2);    // 7 = 12_5
    EXPECT_EQ(last_nonzero_digit(125, 5), 1);
    EXPECT_EQ(last_nonzero_digit(12, 2), 1);
}

TEST(VerifyNoMono, ParityCounterexample)
{
    auto parity = Coloring::from_function(Window{1, 10}, 2, [](i64 n) { return Color(n % 2 ? 1 : 2); });
    auto hit = verify_no_mono_solution(LinearEquation{1, 1, -1}, parity, false);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->assignment, (std::vector<i64>{2, 2, 4}));
    EXPECT_EQ(hit->color, 2);
}

TEST(VerifyNoMono, SmallWindows)
{
    Coloring schur(Window{1, 4}, 2, {1, 2, 2, 1});
    EXPECT_FALSE(verify_no_mono_solution(LinearEquation{1, 1, -1}, schur, false));
    Coloring one(Window{1, 2}, 1, {1, 1});
    EXPECT_FALSE(verify_no_mono_solution(LinearEquation{1, 1, -1}, one, true));
    EXPECT_TRUE(verify_no_mono_solution(LinearEquation{1, 1, -1}, one, false));
}

TEST(VerifyNoMono, ParallelMatchesSequential)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto col = Coloring::from_function(Window{1, 300}, 3, [&](i64) { return Color(1 + rng() % 3); });
        for (LinearEquation eq : {LinearEquation{1, 1, -1}, LinearEquation{1, 2, -3}, LinearEquation{3, 1, -7}}) {
            auto seq = verify_no_mono_solution(eq, col, trial % 2 == 0, 1);
            auto par = verify_no_mono_solution(eq, col, trial % 2 == 0, 4);
            ASSERT_EQ(seq, par) << eq.to_string();
        }
    }
}
