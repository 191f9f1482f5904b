#include "radokit/props.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace radokit;

namespace {

Coloring parity(i64 n)
{
    return Coloring::from_function(Window{1, n}, 2, [](i64 x) { return Color(x % 2 ? 1 : 2); });
}

IntSet multiples(i64 m, Window w)
{
    return IntSet::from_predicate(w, [&](i64 n) { return n % m == 0; });
}

}  // namespace

TEST(ExtractShift, SchurFamilyOnSingleShift)
{
    ShiftCover cover{IntSet::from_predicate(Window{1, 30}, [](i64 n) { return n % 5 == 0 && n <= 25; }), 1, 5, 5};
    auto ex = extract_shift(cover, schur_family());
    EXPECT_EQ(ex.scale, 5);
    EXPECT_EQ(ex.member, (std::vector<i64>{1, 2, 3}));
    EXPECT_EQ(ex.scaled, (std::vector<i64>{5, 10, 15}));
}

TEST(ExtractShift, SingletonFamily)
{
    ShiftCover cover{multiples(3, Window{1, 60}), 2, 3, 10};
    auto ex = extract_shift(cover, singleton_family());
    EXPECT_EQ(ex.member, (std::vector<i64>{1}));
    EXPECT_EQ(ex.scale, 3);
}

TEST(ExtractShift, MinIndexColoringOnDoubledBlock)
{
    // A = 2m·[1,5], m = 3. x gets color 1 exactly when m·x is in A, i.e. x in {2,4}.
    const i64 m = 3;
    auto a = IntSet::from_predicate(Window{1, 60}, [&](i64 n) { return n % (2 * m) == 0 && n <= 10 * m; });
    ShiftCover cover{a, 2, m, 5};
    ASSERT_TRUE(cover.holds());
    auto ex = extract_shift(cover, solution_family(LinearEquation{1, 1, -1}));
    EXPECT_EQ(ex.coloring.colors(), (std::vector<Color>{2, 1, 2, 1, 2}));
    EXPECT_EQ(ex.member, (std::vector<i64>{2, 2, 4}));
    EXPECT_EQ(ex.color, 1);
    EXPECT_EQ(ex.scale, m);
    for (i64 v : ex.scaled)
        EXPECT_TRUE(a.contains(v));
    // the distinct-pair Schur family has no monochromatic member here
    EXPECT_THROW(extract_shift(cover, schur_family()), family_not_regular_error);
}

TEST(ExtractShift, RejectsBrokenCover)
{
    ShiftCover cover{IntSet(Window{1, 10}, {2}), 1, 1, 3};
    EXPECT_THROW(extract_shift(cover, singleton_family()), precondition_error);
}

TEST(HomogeneousSolutions, Examples)
{
    auto sixes = multiples(6, Window{1, 120});
    auto s1 = homogeneous_solutions_in_ps(LinearEquation{1, 1, -1}, sixes, 2, 1);
    EXPECT_EQ(s1.assignment, (std::vector<i64>{6, 6, 12}));

    auto fives = IntSet::from_predicate(Window{1, 25}, [](i64 n) { return n % 5 == 0; });
    auto s2 = homogeneous_solutions_in_ps(LinearEquation{1, 1, -1}, fives, 2, 1);
    EXPECT_EQ(s2.scale, 5);
    EXPECT_EQ(s2.base, (std::vector<i64>{1, 1, 2}));
    EXPECT_EQ(s2.assignment, (std::vector<i64>{5, 5, 10}));

    auto s3 = homogeneous_solutions_in_ps(LinearEquation{2, -2, 1}, sixes, 2, 1);
    EXPECT_EQ(s3.base, (std::vector<i64>{1, 2, 2}));
    EXPECT_EQ(eval(LinearEquation{2, -2, 1}, s3.assignment), 0);
    for (i64 v : s3.assignment)
        EXPECT_TRUE(sixes.contains(v));
}

TEST(HomogeneousSolutions, Preconditions)
{
    auto sixes = multiples(6, Window{1, 120});
    EXPECT_THROW(homogeneous_solutions_in_ps(LinearEquation{1, 1, -3}, sixes, 2, 1), rado_condition_absent_error);
    // Schur is not 2-regular on [1,4]
    EXPECT_THROW(homogeneous_solutions_in_ps(LinearEquation{1, 1, -1}, sixes, 4, 2), family_not_regular_error);
    EXPECT_THROW(homogeneous_solutions_in_ps(LinearEquation{1, 1, -1}, IntSet(Window{1, 10}, {7}), 2, 1),
                 precondition_error);
}

TEST(HomogeneousSolutions, ScaledSolutionsStaySolutions)
{
    for (LinearEquation eq : {LinearEquation{1, 1, -1}, LinearEquation{1, 2, -3}, LinearEquation{2, -2, 1, -1}}) {
        auto col = Coloring::from_function(Window{1, 12}, 1, [](i64) { return Color{1}; });
        for (const auto& s : find_mono_solutions(eq, col, false, 50))
            for (i64 y : {2, 7, 30}) {
                std::vector<i64> v;
                for (i64 x : s.assignment)
                    v.push_back(x * y);
                EXPECT_EQ(eval(eq, v), 0);
            }
    }
}

TEST(JointSolve, Examples)
{
    auto a = IntSet::full(Window{1, 10});
    std::vector<LinearEquation> one{LinearEquation{1, -1}};
    auto j1 = joint_solve(one, a);
    EXPECT_EQ(j1.b, 1);
    EXPECT_EQ(j1.tuples, (std::vector<std::vector<i64>>{{1, 1}}));

    std::vector<LinearEquation> two{LinearEquation{1, -1}, LinearEquation{1, 1, -1}};
    auto j2 = joint_solve(two, a);
    EXPECT_EQ(j2.b, 1);
    EXPECT_EQ(j2.tuples, (std::vector<std::vector<i64>>{{1, 1}, {1, 1, 2}}));
}

TEST(JointSolve, ParityObstruction)
{
    auto odds = IntSet::from_predicate(Window{1, 99}, [](i64 n) { return n % 2 == 1; });
    std::vector<LinearEquation> eqs{LinearEquation{2, -2, 1}};
    try {
        joint_solve(eqs, odds);
        FAIL();
    } catch (const joint_failure_error& e) {
        EXPECT_EQ(e.examined(), 50);
        EXPECT_EQ(e.gamma_counts(), (std::vector<i64>{50}));
        EXPECT_FALSE(e.budget_exhausted());
    }
    // exhaustive cross-check: z = 2(y - x) is even, never odd
    for (auto& t : oracle::all_solutions(LinearEquation{2, -2, 1}, 30, false))
        EXPECT_FALSE(t[0] % 2 && t[1] % 2 && t[2] % 2);
}

TEST(JointSolve, BudgetExhaustion)
{
    auto odds = IntSet::from_predicate(Window{1, 99}, [](i64 n) { return n % 2 == 1; });
    std::vector<LinearEquation> eqs{LinearEquation{2, -2, 1}};
    try {
        joint_solve(eqs, odds, JointOptions{5});
        FAIL();
    } catch (const joint_failure_error& e) {
        EXPECT_TRUE(e.budget_exhausted());
        EXPECT_EQ(e.examined(), 5);
    }
}

TEST(ThreeVar, SchurFormOnParity)
{
    auto col = parity(40);
    auto res = solve_three_var(1, 1, col);
    EXPECT_EQ(res.solution.assignment, (std::vector<i64>{4, 2, 2}));
    EXPECT_TRUE(verify_certificate(LinearEquation{1, -1, -1}, res.solution, &col));
    EXPECT_EQ(res.trace.stage("assemble").size(), 1u);
}

TEST(ThreeVar, DoubledFormOnParity)
{
    auto col = parity(100);
    auto res = solve_three_var(2, 1, col);
    EXPECT_EQ(res.solution.assignment, (std::vector<i64>{4, 2, 4}));
    EXPECT_TRUE(verify_certificate(LinearEquation{2, -2, -1}, res.solution, &col));
    // the direct engine's first solution differs but also verifies
    auto direct = find_mono_solutions(LinearEquation{2, -2, -1}, col, false, 1);
    ASSERT_EQ(direct.size(), 1u);
}

TEST(ThreeVar, NegativeDSwapsXAndY)
{
    auto col = parity(100);
    auto res = solve_three_var(1, -2, col);
    EXPECT_TRUE(verify_certificate(LinearEquation{1, -1, 2}, res.solution, &col));
    auto norm = res.trace.stage("normalize");
    ASSERT_EQ(norm.size(), 1u);
    EXPECT_EQ(norm.front()->at("swapped"), "1");
    EXPECT_EQ(norm.front()->at("d_used"), "2");
}

TEST(ThreeVar, DeterministicTrace)
{
    Rng rng(42);
    auto col = props::random_coloring(rng, Window{1, 500}, 3);
    auto a = solve_three_var(3, 2, col);
    auto b = solve_three_var(3, 2, col);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(PipelineTrace::parse(a.trace.to_text()), a.trace);
}

TEST(ThreeVar, WindowTooSmall)
{
    Coloring col(Window{1, 3}, 3, {1, 2, 3});
    try {
        solve_three_var(1, 1, col);
        FAIL();
    } catch (const pipeline_error& e) {
        EXPECT_FALSE(e.stage().empty());
        EXPECT_NE(std::string(e.what()).find("window too small"), std::string::npos);
        EXPECT_EQ(e.variable(), 0u);
        EXPECT_FALSE(e.trace().steps.empty());
    }
}

TEST(ComposeQ, Examples)
{
    EXPECT_EQ(compose_q(LinearEquation{1, -1}, Rational(2, 3)).coeffs(), (std::vector<i64>{3, -3, -2}));
    EXPECT_EQ(compose_q(LinearEquation{1, 1, -1}, Rational(1)).coeffs(), (std::vector<i64>{1, 1, -1, -1}));
    EXPECT_EQ(compose_q(LinearEquation{2, -2}, Rational(1, -2)).coeffs(), (std::vector<i64>{2, -2, 1}));
    EXPECT_THROW(compose_q(LinearEquation{1}, Rational(0)), precondition_error);
}

TEST(ComposeQ, IteratedCompositionRebuildsPoolEquations)
{
    for (const auto& eq : oracle::equation_pool()) {
        if (!rado_condition(eq))
            continue;
        auto ri = reindex_for_finale(eq);
        auto chain = finale_compositions(ri.permuted, ri.subset.indices.size());
        const auto& last = chain.back().coeffs();
        const auto& want = ri.permuted.coeffs();
        ASSERT_EQ(last.size(), want.size());
        Rational ratio(last[0], want[0]);
        EXPECT_GT(ratio, Rational(0));
        for (std::size_t i = 0; i < want.size(); ++i)
            EXPECT_EQ(Rational(last[i], want[i]), ratio) << eq.to_string();
    }
}

TEST(Finale, ParityColoring)
{
    auto col = parity(200);
    LinearEquation eq{2, -2, 1};
    auto res = replay_finale(eq, col);
    EXPECT_EQ(res.solution.assignment, (std::vector<i64>{2, 4, 4}));
    EXPECT_TRUE(verify_certificate(eq, res.solution, &col));
    EXPECT_EQ(assignment_from_trace(res.trace), res.solution.assignment);
}

TEST(Finale, ExtraCoefficientOnFourColoring)
{
    Rng rng(2024);
    auto col = props::random_coloring(rng, Window{1, 2000}, 4);
    LinearEquation eq{1, -1, 2};
    auto res = replay_finale(eq, col);
    EXPECT_TRUE(verify_certificate(eq, res.solution, &col));
    EXPECT_FALSE(find_mono_solutions(eq, col, false, 1).empty());
    auto reindex = res.trace.stage("reindex");
    ASSERT_EQ(reindex.size(), 1u);
    EXPECT_EQ(reindex.front()->at("subset"), "{1,2}");
}

TEST(Finale, ReindexesAroundTheRadoSubset)
{
    // least subset is {2,3}; variable 1 is appended after it
    LinearEquation eq{1, 2, -2};
    auto ri = reindex_for_finale(eq);
    EXPECT_EQ(ri.order, (std::vector<std::size_t>{2, 3, 1}));
    EXPECT_EQ(ri.permuted.coeffs(), (std::vector<i64>{2, -2, 1}));
    auto col = parity(300);
    auto res = replay_finale(eq, col);
    EXPECT_TRUE(verify_certificate(eq, res.solution, &col));
    EXPECT_EQ(assignment_from_trace(PipelineTrace::parse(res.trace.to_text())), res.solution.assignment);
}

TEST(Finale, ZeroSumEquationUsesConstantTuple)
{
    auto col = parity(10);
    auto res = replay_finale(LinearEquation{3, -1, -2}, col);
    EXPECT_EQ(res.solution.assignment, (std::vector<i64>{1, 1, 1}));
}

TEST(Finale, RadoConditionAbsent)
{
    EXPECT_THROW(replay_finale(LinearEquation{1, 1, -3}, parity(50)), rado_condition_absent_error);
}

TEST(Finale, FailureNamesVariableAndStage)
{
    try {
        replay_finale(LinearEquation{1, -1, 2, 3}, parity(200));
        FAIL() << "expected the later extension to fail on this coloring";
    } catch (const pipeline_error& e) {
        EXPECT_EQ(e.variable(), 4u);
        EXPECT_EQ(e.stage(), "extend");
        EXPECT_FALSE(e.trace().stage("reindex").empty());
    }
}

TEST(Finale, SoundOnRandomColorings)
{
    int ok = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        auto col = props::random_coloring(rng, Window{1, 600}, 3);
        for (LinearEquation eq : {LinearEquation{2, -2, 1}, LinearEquation{1, -2, 3, -1}, LinearEquation{1, 1, -2}}) {
            try {
                auto res = replay_finale(eq, col);
                ASSERT_TRUE(verify_certificate(eq, res.solution, &col));
                ASSERT_FALSE(find_mono_solutions(eq, col, false, 1).empty());
                ++ok;
            } catch (const pipeline_error&) {
            }
        }
    }
    EXPECT_GT(ok, 0);
}

TEST(Props, SeedZeroPassesAndIsDeterministic)
{
    auto a = verify_props(0, 30);
    auto b = verify_props(0, 30);
    EXPECT_TRUE(a.ok) << a.to_text();
    EXPECT_EQ(a.to_text(), b.to_text());
}

TEST(Props, InjectedFailureProducesReproduction)
{
    auto r = verify_props(0, 4, true);
    EXPECT_FALSE(r.ok);
    ASSERT_TRUE(r.failure);
    EXPECT_EQ(r.failure->at("property"), "harness-self-test");
    EXPECT_EQ(r.failure->at("trial"), "3");
    EXPECT_EQ(r.failure->at("status"), "fail");
}
