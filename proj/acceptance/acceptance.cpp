// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// --expect-fail a,b,... names criteria known not to hold; the exit status is 0
// exactly when the failing set equals that list.

#include "radokit/props.hpp"

#include "support/oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <thread>

using namespace radokit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void note(std::string line) { details.push_back(std::move(line)); }
    void fail(std::string line)
    {
        pass = false;
        note(std::move(line));
    }
};

unsigned workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

Outcome rado_equivalence()
{
    Outcome out;
    std::size_t regular = 0, mismatches = 0, budget = 0;
    for (const auto& eq : oracle::equation_pool()) {
        bool has = rado_condition(eq).has_value();
        regular += has;
        auto res = rado_number(eq, 2, false, 200, SearchOptions{SearchOptions{}.max_nodes, workers()});
        if (res.status == SearchStatus::budget_exceeded) {
            ++budget;
            out.fail("budget exceeded: " + eq.to_string());
            continue;
        }
        bool finite = res.status == SearchStatus::found;
        if (has != finite) {
            if (++mismatches <= 12)
                out.fail("mismatch " + eq.to_string() + ": rado_condition=" + (has ? "present" : "absent") +
                         " n*=" + (finite ? std::to_string(*res.n_star) : ">200"));
            out.pass = false;
        }
    }
    out.note("pool=" + std::to_string(oracle::equation_pool().size()) + " regular=" + std::to_string(regular) +
             " mismatches=" + std::to_string(mismatches) + " budget_exceeded=" + std::to_string(budget));
    if (mismatches)
        out.note("every mismatch is a non-regular equation whose 2-color threshold is finite; "
                 "two colors do not witness non-regularity");
    return out;
}

Outcome schur_thresholds()
{
    Outcome out;
    LinearEquation schur{1, 1, -1};
    auto t0 = Clock::now();
    auto r2 = rado_number(schur, 2, false, 50);
    double s2 = seconds_since(t0);
    if (r2.n_star != 5)
        out.fail("r=2: n* differs from 5");
    if (!r2.witness_below || r2.witness_below->coloring.colors() != std::vector<Color>{1, 2, 2, 1} ||
        !verify_certificate(schur, *r2.witness_below))
        out.fail("r=2: witness is not {1,4}/{2,3}");
    if (s2 >= 1.0)
        out.fail("r=2 took " + std::to_string(s2) + "s");
    t0 = Clock::now();
    auto r3 = rado_number(schur, 3, false, 50, SearchOptions{SearchOptions{}.max_nodes, workers()});
    double s3 = seconds_since(t0);
    if (r3.n_star != 14)
        out.fail("r=3: n* differs from 14");
    if (!r3.witness_below || !verify_certificate(schur, *r3.witness_below))
        out.fail("r=3: witness for n=13 does not verify");
    if (s3 >= 300.0)
        out.fail("r=3 took " + std::to_string(s3) + "s");
    out.note("r=2 n*=5 in " + std::to_string(s2) + "s; r=3 n*=" + (r3.n_star ? std::to_string(*r3.n_star) : "?") +
             " in " + std::to_string(s3) + "s, " + std::to_string(r3.nodes) + " nodes");
    return out;
}

Outcome distinct_threshold()
{
    Outcome out;
    LinearEquation eq{1, 1, -2};
    auto res = rado_number(eq, 2, true, 50);
    if (res.n_star != 9)
        out.fail("n* differs from 9");
    auto sols = oracle::all_solutions(eq, 8, true);
    std::size_t count = 0;
    for_each_avoiding_coloring(eq, 2, 8, true, [&](std::span<const Color> colors) {
        ++count;
        std::vector<Color> v(colors.begin(), colors.end());
        AvoidingColoring cert{Coloring(Window{1, 8}, 2, v), eq, true, true};
        if (!verify_certificate(eq, cert))
            out.fail("avoider does not verify");
        for (const auto& s : sols)
            if (oracle::mono(s, v))
                out.fail("odometer finds a monochromatic solution");
    });
    if (count == 0)
        out.fail("no avoiding coloring of [1,8]");
    out.note("canonical avoiders at n=8: " + std::to_string(count));
    return out;
}

Outcome necessity_witness()
{
    Outcome out;
    LinearEquation eq{1, 1, -3};
    const i64 n = 10'000;
    auto t0 = Clock::now();
    auto nc = auto_necessity_coloring(eq, Window{1, n}, false, 13, workers());
    double secs = seconds_since(t0);
    if (nc.verified_bound != n)
        out.fail("verified bound " + std::to_string(nc.verified_bound));
    if (secs >= 10.0)
        out.fail("took " + std::to_string(secs) + "s");
    // independent nested-loop pass: z is forced by x and y
    const auto& colors = nc.coloring.colors();
    for (i64 x = 1; x <= n; ++x)
        for (i64 y = 1; y <= n; ++y) {
            i64 s = x + y;
            if (s % 3 == 0 && colors[static_cast<std::size_t>(x - 1)] == colors[static_cast<std::size_t>(y - 1)] &&
                colors[static_cast<std::size_t>(y - 1)] == colors[static_cast<std::size_t>(s / 3 - 1)]) {
                out.fail("solution " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(s / 3));
                return out;
            }
        }
    out.note("prime=" + std::to_string(nc.prime) + " colors=" + std::to_string(nc.coloring.num_colors()) + " in " +
             std::to_string(secs) + "s");
    return out;
}

Outcome shift_additivity()
{
    Outcome out;
    Rng rng(5001);
    std::size_t total_shifts = 0, multi = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        // A is a union of residue classes mod m; y + s lands in A iff y mod m lies in R - s
        i64 m = props::uniform(rng, 3, 16);
        std::vector<bool> res(static_cast<std::size_t>(m));
        for (auto&& b : res)
            b = props::uniform(rng, 0, 2) == 0;
        res[static_cast<std::size_t>(props::uniform(rng, 0, m - 1))] = true;
        std::vector<bool> taken(static_cast<std::size_t>(m));
        std::vector<i64> shifts;
        for (i64 s = 0; s < 4 * m; ++s) {
            if (s > 0 && props::uniform(rng, 0, 2) != 0)
                continue;
            bool clash = false;
            for (i64 r = 0; r < m; ++r)
                clash = clash || (res[static_cast<std::size_t>(r)] && taken[static_cast<std::size_t>((r - s % m + m) % m)]);
            if (clash)
                continue;
            for (i64 r = 0; r < m; ++r)
                if (res[static_cast<std::size_t>(r)])
                    taken[static_cast<std::size_t>((r - s % m + m) % m)] = true;
            shifts.push_back(s);
        }
        total_shifts += shifts.size();
        multi += shifts.size() >= 2;
        i64 probe_hi = props::uniform(rng, 20, 300);
        Window probe{1, probe_hi};
        auto a = IntSet::from_predicate(Window{1, probe_hi + 4 * m},
                                        [&](i64 v) { return res[static_cast<std::size_t>(v % m)]; });
        // structural disjointness: no y hits two shifts
        for (i64 y = probe.lo; y <= probe.hi; ++y) {
            int hits = 0;
            for (i64 s : shifts)
                hits += a.contains(y + s);
            if (hits > 1) {
                out.fail("trial " + std::to_string(trial) + ": shifts not disjoint");
                return out;
            }
        }
        auto sc = shift_union_count(a, shifts, probe);
        i64 sum = 0;
        for (i64 c : sc.counts)
            sum += c;
        if (sc.union_count != sum) {
            out.fail("trial " + std::to_string(trial) + ": union " + std::to_string(sc.union_count) + " vs " +
                     std::to_string(sum));
            return out;
        }
    }
    out.note("1000 instances, seed 5001; " + std::to_string(total_shifts) + " shifts in total, " +
             std::to_string(multi) + " instances with two or more");
    return out;
}

Outcome delta_intersections()
{
    Outcome out;
    Rng rng(6001);
    for (int trial = 0; trial < 500; ++trial) {
        i64 inv = props::uniform(rng, 1, 7);  // alpha = 1/inv
        i64 len = props::uniform(rng, 40, 200);
        Window probe{1, len};
        std::vector<i64> xs;
        while (static_cast<i64>(xs.size()) < inv + 1) {
            i64 x = props::uniform(rng, 1, 3 * len);
            if (std::find(xs.begin(), xs.end(), x) == xs.end())
                xs.push_back(x);
        }
        std::sort(xs.begin(), xs.end());
        Window aw{1, len + xs.back()};
        IntSet a;
        for (;;) {
            a = props::random_set(rng, aw, std::min(1.0, 1.0 / static_cast<double>(inv) + 0.08));
            auto sc = shift_union_count(a, xs, probe);
            if (std::all_of(sc.counts.begin(), sc.counts.end(), [&](i64 c) { return c * inv >= len; }))
                break;
        }
        auto hit = delta_intersection(a, IntSet(Window{1, xs.back()}, xs));
        auto tag = "trial " + std::to_string(trial) + ": ";
        if (!hit) {
            out.fail(tag + "no common difference");
            return out;
        }
        auto [a1, a2] = hit->in_a;
        auto [x1, x2] = hit->in_x;
        bool ok = a.contains(a1) && a.contains(a2) && a2 - a1 == hit->d && hit->d > 0 && x2 - x1 == hit->d &&
                  std::binary_search(xs.begin(), xs.end(), x1) && std::binary_search(xs.begin(), xs.end(), x2);
        if (!ok) {
            out.fail(tag + "witnesses do not verify");
            return out;
        }
    }
    out.note("500 instances, seed 6001");
    return out;
}

Outcome replay_soundness()
{
    Outcome out;
    LinearEquation eq{2, -2, 1};
    int success = 0;
    std::map<std::string, int> stages;
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(7000 + i);
        auto col = props::random_coloring(rng, Window{1, 2000}, 4);
        try {
            auto res = replay_finale(eq, col);
            auto verdict = verify_certificate(eq, res.solution, &col);
            if (!verdict)
                out.fail("coloring " + std::to_string(i) + ": " + verdict.diagnostic);
            else
                ++success;
        } catch (const pipeline_error& e) {
            ++stages[e.stage()];
        }
        if (find_mono_solutions(eq, col, false, 1).empty())
            out.fail("coloring " + std::to_string(i) + ": direct search found nothing");
    }
    std::string why;
    for (auto& [s, n] : stages)
        why += " " + s + "=" + std::to_string(n);
    out.note("pipeline success " + std::to_string(success) + "/200" + (why.empty() ? "" : ", failures:" + why));
    return out;
}

Outcome compose_identity()
{
    Outcome out;
    Rng rng(8001);
    for (int trial = 0; trial < 10'000; ++trial) {
        auto eq = props::random_equation(rng, 1, 6, 12);
        Rational q(props::uniform(rng, 1, 12) * (props::uniform(rng, 0, 1) ? 1 : -1), props::uniform(rng, 1, 12));
        std::vector<i64> v;
        for (std::size_t i = 0; i <= eq.k(); ++i)
            v.push_back(props::uniform(rng, 1, 1000));
        auto composed = compose_q(eq, q);
        Rational lhs(eval(composed, v));
        Rational rhs(0);
        const auto& c = eq.coeffs();
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            rhs = rhs + Rational(c[i]) * Rational(v[i]);
        rhs = rhs + Rational(c.back()) * (Rational(v[c.size() - 1]) + q * Rational(v[c.size()]));
        Rational scale((Rational(c.back()) * q).den());
        if (lhs != scale * rhs) {
            out.fail("trial " + std::to_string(trial) + ": eq " + eq.to_string() + " q " + q.to_string());
            return out;
        }
    }
    std::size_t checked = 0;
    for (const auto& eq : oracle::equation_pool()) {
        auto subset = rado_condition(eq);
        if (!subset)
            continue;
        auto ri = reindex_for_finale(eq);
        auto last = finale_compositions(ri.permuted, subset->indices.size()).back().coeffs();
        const auto& want = ri.permuted.coeffs();
        bool ok = last.size() == want.size();
        for (std::size_t i = 0; ok && i < want.size(); ++i)
            ok = last[i] * want[0] == want[i] * last[0];
        ok = ok && (last[0] > 0) == (want[0] > 0);
        if (!ok) {
            out.fail("composition chain differs for " + eq.to_string());
            return out;
        }
        ++checked;
    }
    out.note("10000 identities, seed 8001; " + std::to_string(checked) + " pool chains");
    return out;
}

Outcome oracle_equivalence()
{
    Outcome out;
    std::size_t calls = 0;
    for (const auto& eq : oracle::equation_pool())
        for (int r = 1; r <= 3; ++r) {
            auto en = oracle::enumerate_colorings(eq, r, 12, false);
            for (i64 n = 1; n <= 12; ++n) {
                ++calls;
                auto got = has_avoiding_coloring(eq, r, n, false);
                const auto& want = en.first_avoider[static_cast<std::size_t>(n)];
                auto tag = eq.to_string() + " r=" + std::to_string(r) + " n=" + std::to_string(n);
                if (got.status == SearchStatus::budget_exceeded) {
                    out.fail(tag + ": budget exceeded");
                    return out;
                }
                if ((got.status == SearchStatus::found) != want.has_value()) {
                    out.fail(tag + ": existence disagrees");
                    return out;
                }
                if (want && got.coloring->coloring.colors() != *want) {
                    out.fail(tag + ": canonical-first witness differs");
                    return out;
                }
            }
        }
    out.note(std::to_string(calls) + " (equation, r, n) cases");
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"radokit acceptance suite"};
    std::vector<int> expect_fail;
    std::vector<int> only;
    app.add_option("--expect-fail", expect_fail, "Criteria known not to hold")->delimiter(',');
    app.add_option("--only", only, "Run just these criteria")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"rado condition predicts 2-color finiteness", rado_equivalence},
        {"Schur thresholds 5 and 14", schur_thresholds},
        {"distinct-mode threshold 9", distinct_threshold},
        {"necessity coloring for (1,1,-3) up to 10^4", necessity_witness},
        {"counting additivity over disjoint shifts", shift_additivity},
        {"delta intersection", delta_intersections},
        {"finale replay soundness", replay_soundness},
        {"compose_q identity", compose_identity},
        {"backtracker agrees with enumeration", oracle_equivalence},
    };

    std::set<int> failing;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = static_cast<int>(i + 1);
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
            continue;
        auto t0 = Clock::now();
        Outcome o = criteria[i].second();
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " ("
                  << static_cast<long>(seconds_since(t0) * 1000) << " ms)\n";
        for (const auto& d : o.details)
            std::cout << "    " << d << '\n';
        std::cout.flush();
        if (!o.pass)
            failing.insert(id);
    }
    std::set<int> expected;
    for (int id : expect_fail)
        if (only.empty() || std::find(only.begin(), only.end(), id) != only.end())
            expected.insert(id);
    if (failing != expected) {
        std::cout << "unexpected outcome: failing set differs from --expect-fail\n";
        return 1;
    }
    return 0;
}
