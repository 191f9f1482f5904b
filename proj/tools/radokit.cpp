// radokit command-line front end.
//
// Exit codes: 0 success, 1 verified negative answer, 2 budget exhausted,
// 3 operational failure (I/O, unsuitable prime, pipeline without fallback),
// 64 usage error. Invoked through a symlink named rado, sets, replay or verify,
// the link name acts as the command group.

#include "radokit/io.hpp"
#include "radokit/props.hpp"
#include "radokit/replay.hpp"
#include "radokit/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>

using namespace radokit;

namespace {

enum Exit : int { ok = 0, negative = 1, budget = 2, failure = 3, usage = 64 };

class Output {
public:
    bool records = false;

    void emit(const Record& rec, const std::string& human)
    {
        if (records)
            std::cout << rec.to_line() << '\n';
        else if (!human.empty())
            std::cout << human << '\n';
    }
    void emit(const Record& rec) { emit(rec, ""); }
    void human(const std::string& line)
    {
        if (!records)
            std::cout << line << '\n';
    }
};

std::string colors_text(const Coloring& col)
{
    std::string out;
    for (std::size_t i = 0; i < col.colors().size(); ++i)
        out += (i ? "," : "") + std::to_string(col.colors()[i]);
    return out;
}

std::string tuple_text(std::span<const i64> v) { return "(" + join_ints(v) + ")"; }

struct Input {
    std::string path;
    std::string text;
};

Input load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return {path, ss.str()};
}

Coloring load_coloring(const std::string& path, Output& out)
{
    auto in = load(path);
    out.emit(Record("input", path).add("digest", digest(in.text)));
    std::istringstream ss(in.text);
    return read_coloring(ss);
}

IntSet load_set(const std::string& path, Output& out)
{
    auto in = load(path);
    out.emit(Record("input", path).add("digest", digest(in.text)));
    std::istringstream ss(in.text);
    return read_intset(ss);
}

void save_coloring(const std::string& path, const Coloring& col)
{
    write_file(path, [&](std::ostream& o) { write_coloring(o, col); });
}

Record solution_record(const MonochromaticSolution& s, const std::string& via)
{
    auto rec = to_record(s);
    rec.add("via", via);
    return rec;
}

// Runs find_mono_solutions when a pipeline fails and the caller asked for it.
int direct_fallback(const LinearEquation& eq, const Coloring& col, Output& out)
{
    auto sols = find_mono_solutions(eq, col, false, 1);
    if (sols.empty()) {
        out.emit(Record("result", "NO-SOLUTION").add("via", "direct"), "NO-SOLUTION (direct search)");
        return negative;
    }
    out.emit(solution_record(sols.front(), "direct"),
             "SOLUTION " + tuple_text(sols.front().assignment) + " color=" + std::to_string(sols.front().color) +
                 " via=direct");
    return ok;
}

void write_trace(const std::string& path, const PipelineTrace& trace)
{
    if (!path.empty())
        write_file(path, [&](std::ostream& o) { o << trace.to_text(); });
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string prog = "radokit";
    {
        std::string self = argc > 0 ? argv[0] : prog;
        auto slash = self.find_last_of('/');
        std::string base = slash == std::string::npos ? self : self.substr(slash + 1);
        if (base == "rado" || base == "sets" || base == "replay" || base == "verify")
            args.insert(args.begin(), base);
        else if (!base.empty())
            prog = base;
    }
    // equations with a leading negative coefficient ("-3,1,1") are values, not flags
    for (auto& a : args)
        if (a.size() > 1 && a[0] == '-' && std::isdigit(static_cast<unsigned char>(a[1])) &&
            a.find_first_not_of("0123456789", 1) != std::string::npos)
            a = " " + a;

    CLI::App app{"Partition regularity of linear equations", prog};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    unsigned workers = 1;
    app.add_option("--format", "Output format: human or records")
        ->check(CLI::IsMember({"human", "records"}))
        ->each([&](const std::string& v) { out.records = v == "records"; });
    app.add_option("--workers", workers, "Worker threads for parallel searches")->check(CLI::Range(1u, 256u));

    int code = ok;
    std::string eq_text;
    bool distinct = false;
    int colors = 2;
    i64 n = 0, n_max = 200;
    std::uint64_t max_nodes = SearchOptions{}.max_nodes;
    std::string coloring_path, out_path, trace_path, fallback, set_path, with_path, prime = "auto";
    std::size_t limit = 1, size = 3;
    std::vector<i64> lengths;
    i64 c = 1, d = 1;
    std::uint64_t seed = 0;
    i64 trials = 100;
    bool inject = false;

    auto eq = [&] { return parse_equation(detail::trim(eq_text)); };
    auto opts = [&] { return SearchOptions{max_nodes, workers}; };

    // ---- rado
    auto* rado = app.add_subcommand("rado", "Equation-level questions")->require_subcommand(1);

    auto* check = rado->add_subcommand("check", "Decide Rado's condition");
    check->add_option("equation", eq_text, "Coefficients, e.g. 1,1,-1")->required();
    check->callback([&] {
        auto e = eq();
        out.emit(Record("command", "rado check").add("equation", e.to_string()));
        if (auto s = rado_condition(e)) {
            out.emit(Record("result", "REGULAR").add("subset", s->to_string()), "REGULAR I=" + s->to_string());
        } else {
            out.emit(Record("result", "NOT-REGULAR"), "NOT-REGULAR");
            code = negative;
        }
    });

    auto* witness = rado->add_subcommand("witness", "Necessity coloring for an equation without Rado's condition");
    witness->add_option("equation", eq_text)->required();
    witness->add_option("--upto", n, "Verify on [1,N]")->default_val(1000)->check(CLI::PositiveNumber);
    witness->add_option("--prime", prime, "Prime p or 'auto'")->default_val("auto");
    witness->add_flag("--distinct", distinct, "Only count solutions with distinct values");
    witness->add_option("--out", out_path, "Write the coloring here");
    witness->callback([&] {
        auto e = eq();
        out.emit(Record("command", "rado witness").add("equation", e.to_string()).add("n", n).add("prime", prime));
        try {
            auto nc = prime == "auto" ? auto_necessity_coloring(e, Window{1, n}, distinct, 13, workers)
                                      : necessity_coloring(e, detail::parse_int(prime), Window{1, n}, distinct, workers);
            out.emit(Record("result", "AVOIDING").add("prime", nc.prime).add("verified_bound", nc.verified_bound),
                     "AVOIDING p=" + std::to_string(nc.prime) + " verified on [1," + std::to_string(nc.verified_bound) +
                         "]");
            if (!out_path.empty())
                save_coloring(out_path, nc.coloring);
        } catch (const partition_regular_error& err) {
            out.emit(Record("result", "REGULAR").add("subset", err.subset().to_string()),
                     "REGULAR I=" + err.subset().to_string() + " (no necessity coloring exists)");
            code = negative;
        } catch (const unsuitable_prime_error& err) {
            out.emit(Record("result", "UNSUITABLE-PRIME")
                         .add("prime", err.prime())
                         .add("assignment", join_ints(err.counterexample().assignment)),
                     "UNSUITABLE-PRIME p=" + std::to_string(err.prime()) + " solution " +
                         tuple_text(err.counterexample().assignment));
            code = failure;
        }
    });

    auto* number = rado->add_subcommand("number", "Least n forcing a monochromatic solution");
    number->add_option("equation", eq_text)->required();
    number->add_option("--colors", colors)->default_val(2)->check(CLI::Range(1, 255));
    number->add_option("--max", n_max, "Largest n explored")->default_val(200)->check(CLI::PositiveNumber);
    number->add_option("--max-nodes", max_nodes, "Search node budget")->default_val(SearchOptions{}.max_nodes);
    number->add_flag("--distinct", distinct);
    number->add_option("--out", out_path, "Write the largest avoiding coloring here");
    number->callback([&] {
        auto e = eq();
        out.emit(Record("command", "rado number")
                     .add("equation", e.to_string())
                     .add("colors", colors)
                     .add("max", n_max)
                     .add("max_nodes", std::to_string(max_nodes))
                     .add("distinct", distinct));
        auto res = rado_number(e, colors, distinct, n_max, opts());
        auto rec = to_record(res);
        switch (res.status) {
        case SearchStatus::found: out.emit(rec, "n*=" + std::to_string(*res.n_star)); break;
        case SearchStatus::absent:
            out.emit(rec, "n*>" + std::to_string(n_max));
            code = negative;
            break;
        case SearchStatus::budget_exceeded:
            out.emit(rec, "BUDGET-EXCEEDED after " + std::to_string(res.nodes) + " nodes");
            code = budget;
            break;
        }
        if (res.witness_below) {
            const auto& col = res.witness_below->coloring;
            out.emit(Record("witness_n", col.window().hi).add("colors", colors_text(col)),
                     "avoiding [1," + std::to_string(col.window().hi) + "]: " + colors_text(col));
            if (!out_path.empty())
                save_coloring(out_path, col);
        }
    });

    auto* avoid = rado->add_subcommand("avoid", "First canonical avoiding coloring of [1,n]");
    avoid->add_option("equation", eq_text)->required();
    avoid->add_option("--colors", colors)->default_val(2)->check(CLI::Range(1, 255));
    avoid->add_option("--upto", n, "Color [1,n]")->required()->check(CLI::PositiveNumber);
    avoid->add_option("--max-nodes", max_nodes)->default_val(SearchOptions{}.max_nodes);
    avoid->add_flag("--distinct", distinct);
    avoid->add_option("--out", out_path);
    avoid->callback([&] {
        auto e = eq();
        out.emit(Record("command", "rado avoid")
                     .add("equation", e.to_string())
                     .add("colors", colors)
                     .add("n", n)
                     .add("max_nodes", std::to_string(max_nodes))
                     .add("distinct", distinct));
        auto res = has_avoiding_coloring(e, colors, n, distinct, opts());
        Record rec("status", to_string(res.status));
        rec.add("nodes", std::to_string(res.nodes));
        if (res.status == SearchStatus::found) {
            const auto& col = res.coloring->coloring;
            rec.add("colors", colors_text(col));
            out.emit(rec, "AVOIDING " + colors_text(col));
            if (!out_path.empty())
                save_coloring(out_path, col);
        } else if (res.status == SearchStatus::absent) {
            out.emit(rec, "NONE: every " + std::to_string(colors) + "-coloring of [1," + std::to_string(n) +
                              "] has a monochromatic solution");
            code = negative;
        } else {
            out.emit(rec, "BUDGET-EXCEEDED after " + std::to_string(res.nodes) + " nodes");
            code = budget;
        }
    });

    auto* solve = rado->add_subcommand("solve", "Monochromatic solutions under a given coloring");
    solve->add_option("equation", eq_text)->required();
    solve->add_option("--coloring", coloring_path)->required();
    solve->add_option("--limit", limit, "Maximum number of solutions")->default_val(1);
    solve->add_flag("--distinct", distinct);
    solve->callback([&] {
        auto e = eq();
        out.emit(Record("command", "rado solve").add("equation", e.to_string()).add("limit", limit));
        auto col = load_coloring(coloring_path, out);
        auto sols = find_mono_solutions(e, col, distinct, limit);
        for (const auto& s : sols)
            out.emit(solution_record(s, "direct"),
                     "SOLUTION " + tuple_text(s.assignment) + " color=" + std::to_string(s.color));
        if (sols.empty()) {
            out.emit(Record("result", "NO-SOLUTION"), "NO-SOLUTION");
            code = negative;
        }
    });

    // ---- sets
    auto* sets = app.add_subcommand("sets", "Finite largeness statistics of an integer set")->require_subcommand(1);

    auto* stats = sets->add_subcommand("stats", "Interval, gap and density statistics");
    stats->add_option("set", set_path)->required();
    stats->add_option("--lengths", lengths, "Interval lengths for the density table (default: window size)")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    stats->callback([&] {
        out.emit(Record("command", "sets stats"));
        auto a = load_set(set_path, out);
        if (a.empty()) {
            out.emit(Record("result", "EMPTY"), "EMPTY");
            code = negative;
            return;
        }
        auto run = longest_interval(a);
        out.emit(Record("longest", run.length).add("start", run.start),
                 "longest interval: " + std::to_string(run.length) + " from " + std::to_string(run.start));
        auto g = gap_stats(a);
        out.emit(to_record(g), "max gap: " + std::to_string(g.max_gap) + ", multiplicative gap: " +
                                   (g.mult_gap ? std::to_string(*g.mult_gap) : std::string("none")));
        if (lengths.empty())
            lengths.push_back(a.window().size());
        out.human("n\tcount\tratio\tinterval");
        for (i64 len : lengths) {
            auto dens = banach_density(a, len);
            out.emit(to_record(dens), std::to_string(dens.n) + "\t" + std::to_string(dens.count) + "\t" +
                                          dens.ratio.to_string() + "\t[" + std::to_string(dens.best_start + 1) + "," +
                                          std::to_string(dens.best_start + dens.n) + "]");
        }
    });

    auto* delta = sets->add_subcommand("delta", "Difference set, or a common difference with a second set");
    delta->add_option("set", set_path)->required();
    delta->add_option("--with", with_path, "Second set X: report a shared element of Delta(A) and Delta(X)");
    delta->callback([&] {
        out.emit(Record("command", "sets delta"));
        auto a = load_set(set_path, out);
        if (with_path.empty()) {
            auto m = delta_set(a).members();
            out.emit(Record("delta", join_ints(m)).add("size", m.size()), "Delta: " + join_ints(m, ' '));
            return;
        }
        auto x = load_set(with_path, out);
        auto hit = delta_intersection(a, x);
        if (!hit) {
            out.emit(Record("result", "NONE"), "NONE");
            code = negative;
            return;
        }
        out.emit(Record("d", hit->d)
                     .add("a", std::to_string(hit->in_a.first) + "," + std::to_string(hit->in_a.second))
                     .add("x", std::to_string(hit->in_x.first) + "," + std::to_string(hit->in_x.second)),
                 "d=" + std::to_string(hit->d) + " = " + std::to_string(hit->in_a.second) + "-" +
                     std::to_string(hit->in_a.first) + " = " + std::to_string(hit->in_x.second) + "-" +
                     std::to_string(hit->in_x.first));
    });

    auto* clique = sets->add_subcommand("clique", "Least X of given size with Delta(X) inside the set");
    clique->add_option("set", set_path)->required();
    clique->add_option("--size", size)->default_val(3)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    clique->callback([&] {
        out.emit(Record("command", "sets clique").add("size", size));
        auto a = load_set(set_path, out);
        auto w = delta_large_witness(a, size);
        if (!w) {
            out.emit(Record("result", "NONE"), "NONE");
            code = negative;
            return;
        }
        auto m = w->members();
        out.emit(Record("x", join_ints(m)), "X = {" + join_ints(m) + "}");
    });

    // ---- replay
    auto* replay = app.add_subcommand("replay", "Constructive solution steps at finite scale")->require_subcommand(1);

    auto* three = replay->add_subcommand("three-var", "Solve c*x - c*y - d*z = 0 through the density pipeline");
    three->add_option("--c", c)->required()->check(CLI::PositiveNumber);
    three->add_option("--d", d)->required();
    three->add_option("--coloring", coloring_path)->required();
    three->add_option("--fallback", fallback)->check(CLI::IsMember({"direct"}));
    three->add_option("--trace", trace_path);
    three->callback([&] {
        if (d == 0)
            throw CLI::ValidationError("--d", "must be nonzero");
        out.emit(Record("command", "replay three-var").add("c", c).add("d", d));
        auto col = load_coloring(coloring_path, out);
        try {
            auto res = solve_three_var(c, d, col);
            write_trace(trace_path, res.trace);
            out.emit(solution_record(res.solution, "pipeline"),
                     "SOLUTION " + tuple_text(res.solution.assignment) + " color=" +
                         std::to_string(res.solution.color));
        } catch (const pipeline_error& err) {
            write_trace(trace_path, err.trace());
            out.emit(Record("pipeline", "failed").add("stage", err.stage()), err.what());
            code = fallback == "direct" ? direct_fallback(LinearEquation({c, -c, -d}), col, out) : failure;
        }
    });

    auto* finale = replay->add_subcommand("finale", "Monochromatic solution by recursive composition");
    finale->add_option("equation", eq_text)->required();
    finale->add_option("--coloring", coloring_path)->required();
    finale->add_option("--fallback", fallback)->check(CLI::IsMember({"direct"}));
    finale->add_option("--trace", trace_path);
    finale->callback([&] {
        auto e = eq();
        out.emit(Record("command", "replay finale").add("equation", e.to_string()));
        auto col = load_coloring(coloring_path, out);
        try {
            auto res = replay_finale(e, col);
            write_trace(trace_path, res.trace);
            out.emit(solution_record(res.solution, "pipeline"),
                     "SOLUTION " + tuple_text(res.solution.assignment) + " color=" +
                         std::to_string(res.solution.color));
        } catch (const rado_condition_absent_error& err) {
            out.emit(Record("result", "NOT-REGULAR"), std::string("NOT-REGULAR: ") + err.what());
            code = negative;
        } catch (const pipeline_error& err) {
            write_trace(trace_path, err.trace());
            out.emit(Record("pipeline", "failed").add("stage", err.stage()).add("variable", err.variable()),
                     err.what());
            code = fallback == "direct" ? direct_fallback(e, col, out) : failure;
        }
    });

    // ---- verify
    auto* verify = app.add_subcommand("verify", "Self-checks")->require_subcommand(1);
    auto* props = verify->add_subcommand("props", "Seeded randomized property suite");
    props->add_option("--seed", seed)->default_val(0);
    props->add_option("--trials", trials)->default_val(100)->check(CLI::PositiveNumber);
    props->add_flag("--inject-failure", inject, "Harness self-test: force a failure")->group("");
    props->callback([&] {
        auto report = verify_props(seed, trials, inject);
        std::cout << report.to_text();
        if (!report.ok)
            code = negative;
    });

    auto started = std::chrono::steady_clock::now();
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "wall_ms=" << ms.count() << '\n';
    return code;
}
