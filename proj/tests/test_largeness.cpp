#include "radokit/largeness.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace radokit;

namespace {

IntSet multiples(i64 m, Window w)
{
    return IntSet::from_predicate(w, [&](i64 n) { return n % m == 0; });
}

/// Max gap by its definition, with virtual members at lo-1 and hi+1.
i64 naive_max_gap(const IntSet& a)
{
    i64 prev = a.window().lo - 1, best = 0;
    for (i64 n = a.window().lo; n <= a.window().hi + 1; ++n)
        if (n == a.window().hi + 1 || a.contains(n)) {
            best = std::max(best, n - prev);
            prev = n;
        }
    return best;
}

std::optional<i64> naive_mult_gap(const IntSet& a)
{
    const i64 hi = a.window().hi;
    for (i64 k = 1; k <= hi; ++k) {
        bool ok = true;
        for (i64 x = 1; ok && k * x <= hi; ++x) {
            bool hit = false;
            for (i64 j = 1; j <= k; ++j)
                hit = hit || a.contains(j * x);
            ok = hit;
        }
        if (ok)
            return k;
    }
    return std::nullopt;
}

}  // namespace

TEST(LongestInterval, Examples)
{
    EXPECT_EQ(longest_interval(IntSet(Window{1, 10}, {1, 2, 3, 7, 8})), (IntervalRun{3, 1}));
    EXPECT_EQ(longest_interval(IntSet(Window{1, 10}, {5})), (IntervalRun{1, 5}));
    EXPECT_EQ(longest_interval(IntSet::full(Window{1, 10})), (IntervalRun{10, 1}));
    EXPECT_EQ(longest_interval(IntSet(Window{1, 10}, {1, 2, 5, 6})), (IntervalRun{2, 1}));  // leftmost tie
    EXPECT_THROW(longest_interval(IntSet(Window{1, 10})), precondition_error);
}

TEST(GapStats, Examples)
{
    auto odds = IntSet::from_predicate(Window{1, 10}, [](i64 n) { return n % 2 == 1; });
    EXPECT_EQ(gap_stats(odds).max_gap, 2);
    EXPECT_EQ(gap_stats(multiples(3, Window{1, 30})).mult_gap, 3);
    EXPECT_EQ(gap_stats(IntSet(Window{1, 100}, {1})).max_gap, 100);
}

TEST(GapStats, MatchDefinitionsOnRandomSets)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        i64 hi = 5 + static_cast<i64>(rng() % 80);
        auto a = IntSet::from_predicate(Window{1, hi}, [&](i64) { return rng() % 4 == 0; });
        if (a.empty())
            continue;
        auto g = gap_stats(a);
        ASSERT_EQ(g.max_gap, naive_max_gap(a));
        ASSERT_EQ(g.mult_gap, naive_mult_gap(a));
    }
}

TEST(DeltaSet, Examples)
{
    EXPECT_EQ(delta_set(IntSet(Window{1, 10}, {1, 3, 6})).members(), (std::vector<i64>{2, 3, 5}));
    EXPECT_EQ(delta_set(IntSet(Window{1, 10}, {2, 4, 6, 8})).members(), (std::vector<i64>{2, 4, 6}));
    EXPECT_EQ(delta_set(IntSet(Window{1, 10}, {1, 2})).members(), (std::vector<i64>{1}));
}

TEST(DeltaLargeWitness, Examples)
{
    auto evens = multiples(2, Window{1, 50});
    EXPECT_EQ(delta_large_witness(evens, 4)->members(), (std::vector<i64>{1, 3, 5, 7}));
    EXPECT_FALSE(delta_large_witness(IntSet(Window{1, 1}, {1}), 3));
    EXPECT_EQ(delta_large_witness(IntSet::full(Window{1, 10}), 4)->members(), (std::vector<i64>{1, 2, 3, 4}));
}

TEST(DeltaLargeWitness, LeastByBruteForce)
{
    // all 3-subsets of the window in lexicographic order; first one whose differences lie in A
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        i64 hi = 6 + static_cast<i64>(rng() % 20);
        auto a = IntSet::from_predicate(Window{1, hi}, [&](i64) { return rng() % 3 != 0; });
        std::optional<std::vector<i64>> want;
        for (i64 x = 1; x <= hi && !want; ++x)
            for (i64 y = x + 1; y <= hi && !want; ++y)
                for (i64 z = y + 1; z <= hi && !want; ++z)
                    if (a.contains(y - x) && a.contains(z - y) && a.contains(z - x))
                        want = std::vector<i64>{x, y, z};
        auto got = delta_large_witness(a, 3);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) {
            EXPECT_EQ(got->members(), *want);
        }
    }
}

TEST(ThickDelta, FullWindowRecursion)
{
    auto t = IntSet::full(Window{1, 1000});
    auto x = thick_delta_witness(t, 3);
    EXPECT_EQ(x.members(), (std::vector<i64>{1, 3, 5}));
    EXPECT_TRUE(delta_set(x).is_subset_of(t));
}

TEST(ThickDelta, WindowExhausted)
{
    try {
        thick_delta_witness(IntSet(Window{1, 2}, {1, 2}), 3);
        FAIL();
    } catch (const window_exhausted_error& e) {
        EXPECT_EQ(e.reached(), 1u);  // x1 = 1 and no interval of length > 1
    }
}

TEST(ThickDelta, DifferencesStayInsideRandomThickSets)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = IntSet::from_predicate(Window{1, 500}, [&](i64) { return rng() % 25 != 0; });
        auto xs = thick_delta_sequence(t, 10);
        ASSERT_FALSE(xs.empty());
        EXPECT_EQ(xs.front(), *t.min());
        if (xs.size() >= 2) {
            EXPECT_TRUE(delta_set(IntSet(Window{1, 500}, xs)).is_subset_of(t));
        }
    }
}

TEST(RamseyMonoDelta, Examples)
{
    auto parity = Coloring::from_function(Window{1, 10}, 2, [](i64 n) { return Color(n % 2 ? 1 : 2); });
    auto x = IntSet::interval(Window{1, 6}, 1, 6);
    auto got = ramsey_mono_delta(x, parity, 3);
    ASSERT_TRUE(got);
    EXPECT_EQ(got->subset.members(), (std::vector<i64>{1, 3, 5}));
    EXPECT_EQ(got->color, 2);

    auto pair = ramsey_mono_delta(IntSet(Window{1, 2}, {1, 2}), parity, 2);
    ASSERT_TRUE(pair);
    EXPECT_EQ(pair->subset.members(), (std::vector<i64>{1, 2}));

    Coloring rb(Window{1, 2}, 2, {1, 2});
    EXPECT_FALSE(ramsey_mono_delta(IntSet(Window{1, 3}, {1, 2, 3}), rb, 3));
}

TEST(BanachDensity, Examples)
{
    auto d = banach_density(multiples(3, Window{1, 300}), 30);
    EXPECT_EQ(d.count, 10);
    EXPECT_EQ(d.ratio, Rational(1, 3));

    auto block = IntSet::from_predicate(Window{1, 200}, [](i64 n) { return (n >= 50 && n <= 100) || n % 37 == 0; });
    auto b = banach_density(block, 40);
    EXPECT_EQ(b.count, 40);
    EXPECT_EQ(b.ratio, Rational(1));
    EXPECT_GE(b.best_start + 1, 50);
    EXPECT_LE(b.best_start + 40, 100);

    EXPECT_EQ(banach_density(IntSet(Window{1, 100}), 10).count, 0);
    EXPECT_THROW(banach_density(IntSet(Window{1, 5}), 10), precondition_error);
}

TEST(ShiftUnionCount, Examples)
{
    std::vector<i64> s12{1, 2};
    auto tens = shift_union_count(multiples(10, Window{1, 1000}), s12, Window{1, 100});
    EXPECT_EQ(tens.counts, (std::vector<i64>{10, 10}));
    EXPECT_EQ(tens.union_count, 20);

    std::vector<i64> s24{2, 4};
    auto evens = shift_union_count(multiples(2, Window{1, 200}), s24, Window{1, 100});
    EXPECT_EQ(evens.counts, (std::vector<i64>{50, 50}));
    EXPECT_EQ(evens.union_count, 50);

    std::vector<i64> unsorted{4, 2};
    EXPECT_THROW(shift_union_count(multiples(2, Window{1, 200}), unsorted, Window{1, 100}), precondition_error);
}

TEST(DeltaIntersection, Examples)
{
    auto hit = delta_intersection(multiples(2, Window{1, 100}), IntSet(Window{1, 3}, {1, 2, 3}));
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->d, 2);
    EXPECT_EQ(hit->in_a, (std::pair<i64, i64>{2, 4}));
    EXPECT_EQ(hit->in_x, (std::pair<i64, i64>{1, 3}));
    EXPECT_FALSE(delta_intersection(IntSet(Window{1, 2}, {1, 2}), IntSet(Window{1, 3}, {1, 3})));
}

TEST(SelectPsPiece, Examples)
{
    Window w{1, 100};
    auto s = IntSet::full(w);
    std::vector<IntSet> parity{multiples(2, w), s.set_difference(multiples(2, w))};
    EXPECT_EQ(select_ps_piece(s, s, parity, 2).index, 2u);

    std::vector<IntSet> single{s};
    EXPECT_EQ(select_ps_piece(s, s, single, 1).index, 1u);

    auto fifty = IntSet(w, {50});
    std::vector<IntSet> split{s.set_difference(fifty), fifty};
    auto sel = select_ps_piece(s, s, split, 2, 2);
    EXPECT_EQ(sel.index, 1u);
    ASSERT_FALSE(sel.steps.empty());
    EXPECT_FALSE(sel.steps.front().syndetic);
}
