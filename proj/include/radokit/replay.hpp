#pragma once

// Finite-scale replay of the constructive partition-regularity argument:
// multiplicative shift extraction, solutions inside sets with a shift cover,
// joint solutions sharing a first variable, the three-variable density
// pipeline, the substitution x_k <- x_k + q x_{k+1}, and the end-to-end solver.

#include "radokit/largeness.hpp"
#include "radokit/rado.hpp"
#include "radokit/records.hpp"
#include "radokit/search.hpp"

#include <functional>

namespace radokit {

// ---------------------------------------------------------------------------
// Traces and errors

struct PipelineTrace {
    std::vector<Record> steps;

    Record& add(std::string stage)
    {
        steps.emplace_back("stage", std::move(stage));
        return steps.back();
    }

    std::vector<const Record*> stage(std::string_view name) const
    {
        std::vector<const Record*> out;
        for (const auto& r : steps)
            if (r.get("stage") == name)
                out.push_back(&r);
        return out;
    }

    std::string to_text() const
    {
        std::string out;
        for (const auto& r : steps)
            out += r.to_line() + '\n';
        return out;
    }

    static PipelineTrace parse(std::string_view text)
    {
        PipelineTrace t;
        for (auto line : detail::split(text, '\n')) {
            if (detail::trim(line).empty())
                continue;
            auto rec = Record::parse(line);
            if (!rec.get("stage"))
                throw parse_error("trace line without stage: " + std::string(line));
            t.steps.push_back(std::move(rec));
        }
        return t;
    }

    friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

class pipeline_error : public error {
public:
    pipeline_error(std::string stage, std::size_t variable, const std::string& why, PipelineTrace trace)
        : error(describe(stage, variable, why)), stage_(std::move(stage)), variable_(variable), trace_(std::move(trace))
    {
    }
    const std::string& stage() const { return stage_; }
    /// 1-based variable being extended, 0 outside the finale.
    std::size_t variable() const { return variable_; }
    const PipelineTrace& trace() const { return trace_; }

private:
    static std::string describe(const std::string& stage, std::size_t variable, const std::string& why)
    {
        std::string out = "pipeline failed";
        if (variable)
            out += " at variable " + std::to_string(variable);
        return out + " / stage " + stage + ": " + why;
    }

    std::string stage_;
    std::size_t variable_;
    PipelineTrace trace_;
};

class rado_condition_absent_error : public error {
public:
    explicit rado_condition_absent_error(const LinearEquation& eq)
        : error("Rado condition absent for " + eq.to_string())
    {
    }
};

class family_not_regular_error : public error {
public:
    family_not_regular_error(const std::string& family, i64 r, i64 n)
        : error("family " + family + " not " + std::to_string(r) + "-regular at n=" + std::to_string(n))
    {
    }
};

// ---------------------------------------------------------------------------
// Shift extraction

/// m·[1,n] inside the union of A/i for i = 1..r.
struct ShiftCover {
    IntSet base;
    i64 r = 1;
    i64 m = 1;
    i64 n = 1;

    /// Least i <= r with i·m·x in A, or 0.
    i64 shift_of(i64 x) const
    {
        for (i64 i = 1; i <= r; ++i)
            if (base.contains(checked_mul(checked_mul(i, m), x)))
                return i;
        return 0;
    }

    bool holds() const
    {
        if (r < 1 || m < 1 || n < 1)
            return false;
        for (i64 x = 1; x <= n; ++x)
            if (shift_of(x) == 0)
                return false;
        return true;
    }
};

/// Least m with m·[1,n] covered, if any m fits inside A's window.
inline std::optional<ShiftCover> find_shift_cover(const IntSet& a, i64 n, i64 r)
{
    if (n < 1 || r < 1)
        throw precondition_error("shift cover needs n >= 1 and r >= 1");
    for (i64 m = 1; m * n <= a.window().hi; ++m) {
        ShiftCover cover{a, r, m, n};
        if (cover.holds())
            return cover;
    }
    return std::nullopt;
}

/// A family of finite sets (or tuples) over [1,n], given by its first
/// monochromatic member under a coloring, in the family's canonical order.
struct FamilySpec {
    std::string name;
    std::function<std::optional<std::vector<i64>>(const Coloring&)> first_monochromatic;
};

/// {a, b, a+b} with a < b, ordered lexicographically by (a, b).
inline FamilySpec schur_family()
{
    return {"schur", [](const Coloring& col) -> std::optional<std::vector<i64>> {
                const auto& w = col.window();
                for (i64 a = w.lo; a <= w.hi; ++a)
                    for (i64 b = a + 1; a + b <= w.hi; ++b)
                        if (col.color_of(a) == col.color_of(b) && col.color_of(b) == col.color_of(a + b))
                            return std::vector<i64>{a, b, a + b};
                return std::nullopt;
            }};
}

inline FamilySpec singleton_family()
{
    return {"singletons", [](const Coloring& col) -> std::optional<std::vector<i64>> {
                return std::vector<i64>{col.window().lo};
            }};
}

/// Solution tuples of eq in lexicographic order.
inline FamilySpec solution_family(const LinearEquation& eq)
{
    return {"solutions(" + eq.to_string() + ")", [eq](const Coloring& col) -> std::optional<std::vector<i64>> {
                if (auto s = first_mono_solution(eq, col, false))
                    return s->assignment;
                return std::nullopt;
            }};
}

struct ShiftExtraction {
    i64 scale = 0;               // i·m
    Color color = 0;             // i
    std::vector<i64> member;     // F, inside [1,n]
    std::vector<i64> scaled;     // scale·F, inside A
    Coloring coloring;           // x -> least i with i·m·x in A
};

inline ShiftExtraction extract_shift(const ShiftCover& cover, const FamilySpec& family)
{
    if (!cover.holds())
        throw precondition_error("shift cover invariant fails: m·[1,n] not inside the union of A/i");
    if (cover.r > std::numeric_limits<Color>::max())
        throw precondition_error("too many shifts");
    auto coloring = Coloring::from_function(Window{1, cover.n}, static_cast<int>(cover.r),
                                            [&](i64 x) { return static_cast<Color>(cover.shift_of(x)); });
    auto member = family.first_monochromatic(coloring);
    if (!member)
        throw family_not_regular_error(family.name, cover.r, cover.n);

    ShiftExtraction out;
    out.color = coloring.color_of(member->front());
    out.scale = checked_mul(out.color, cover.m);
    out.member = *member;
    for (i64 x : out.member) {
        if (coloring.color_of(x) != out.color)
            throw error("internal: family member is not monochromatic");
        i64 y = checked_mul(out.scale, x);
        if (!cover.base.contains(y))
            throw error("internal: scaled member " + std::to_string(y) + " not in A");
        out.scaled.push_back(y);
    }
    out.coloring = std::move(coloring);
    return out;
}

struct HomogeneousSolution {
    std::vector<i64> assignment;  // inside A
    std::vector<i64> base;        // solution over [1,n] before scaling
    i64 scale = 0;
    ShiftCover cover;
};

inline HomogeneousSolution homogeneous_solutions_in_ps(const LinearEquation& eq, const IntSet& a, i64 n, i64 r,
                                                       const SearchOptions& opts = {})
{
    if (!rado_condition(eq))
        throw rado_condition_absent_error(eq);
    if (r > std::numeric_limits<Color>::max())
        throw precondition_error("too many colors");
    auto avoid = has_avoiding_coloring(eq, static_cast<int>(r), n, false, opts);
    if (avoid.status == SearchStatus::budget_exceeded)
        throw precondition_error("regularity at n=" + std::to_string(n) + " undecided within the node budget");
    if (avoid.status == SearchStatus::found)
        throw family_not_regular_error(solution_family(eq).name, r, n);

    auto cover = find_shift_cover(a, n, r);
    if (!cover)
        throw precondition_error("A admits no shift cover for n=" + std::to_string(n) + ", r=" + std::to_string(r));
    auto ex = extract_shift(*cover, solution_family(eq));
    if (eval(eq, ex.scaled) != 0)
        throw error("internal: scaled tuple does not solve the equation");
    return {ex.scaled, ex.member, ex.scale, *cover};
}

// ---------------------------------------------------------------------------
// Joint solutions with a shared first variable

struct JointSolution {
    i64 b = 0;
    std::vector<std::vector<i64>> tuples;
    i64 examined = 0;
};

struct JointOptions {
    i64 max_candidates = 1'000'000;  // values of b tried
};

class joint_failure_error : public error {
public:
    joint_failure_error(std::vector<i64> gamma_counts, i64 examined, bool budget_exhausted)
        : error(describe(gamma_counts, examined, budget_exhausted)),
          gamma_counts_(std::move(gamma_counts)),
          examined_(examined),
          budget_exhausted_(budget_exhausted)
    {
    }
    /// Per equation: how many examined b had no completion inside A.
    const std::vector<i64>& gamma_counts() const { return gamma_counts_; }
    i64 examined() const { return examined_; }
    bool budget_exhausted() const { return budget_exhausted_; }

private:
    static std::string describe(const std::vector<i64>& g, i64 examined, bool budget)
    {
        std::string out = "no common b within budget (examined " + std::to_string(examined);
        if (budget)
            out += ", budget exhausted";
        out += "; rejected per equation:";
        for (i64 v : g)
            out += ' ' + std::to_string(v);
        return out + ")";
    }

    std::vector<i64> gamma_counts_;
    i64 examined_;
    bool budget_exhausted_;
};

inline JointSolution joint_solve(std::span<const LinearEquation> eqs, const IntSet& a, const JointOptions& opts = {})
{
    if (eqs.empty())
        throw precondition_error("joint_solve needs at least one equation");
    for (const auto& eq : eqs)
        if (!rado_condition(eq))
            throw rado_condition_absent_error(eq);

    // A as color 1 of a two-coloring: completions "inside A" become monochromatic
    // solutions whose first coordinate is b.
    auto inside = Coloring::from_function(a.window(), 2, [&](i64 n) { return a.contains(n) ? Color{1} : Color{2}; });
    std::vector<detail::MonoScanner> scanners;
    for (const auto& eq : eqs)
        scanners.emplace_back(eq, inside, false);

    std::vector<i64> gamma(eqs.size(), 0);
    i64 examined = 0;
    bool exhausted = false;
    std::optional<JointSolution> found;
    a.for_each([&](i64 b) {
        if (found || exhausted)
            return;
        if (examined >= opts.max_candidates) {
            exhausted = true;
            return;
        }
        ++examined;
        JointSolution sol{b, {}, examined};
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            std::optional<std::vector<i64>> tuple;
            scanners[i].scan(b, b, [&](MonochromaticSolution s) {
                tuple = std::move(s.assignment);
                return false;
            });
            if (!tuple) {
                // b is in Gamma_i (relative to the window); later equations are not tried
                ++gamma[i];
                return;
            }
            sol.tuples.push_back(std::move(*tuple));
        }
        found = std::move(sol);
    });
    if (!found)
        throw joint_failure_error(gamma, examined, exhausted);
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const auto& t = found->tuples[i];
        if (t.front() != found->b || eval(eqs[i], t) != 0)
            throw error("internal: joint tuple does not verify");
        for (i64 v : t)
            if (!a.contains(v))
                throw error("internal: joint tuple leaves A");
    }
    return *found;
}

// ---------------------------------------------------------------------------
// Three-variable pipeline: c·x - c·y - d·z = 0

struct ThreeVarOptions {
    std::optional<Rational> theta;          // default 1/(2r)
    std::optional<i64> analysis_length;     // default: the whole window
    std::size_t max_thick = 16;             // elements of the thick Delta sequence
};

struct ThreeVarResult {
    MonochromaticSolution solution;  // (x, y, z)
    PipelineTrace trace;
};

namespace detail {

inline std::string color_list(const std::vector<Color>& cs)
{
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i)
        out += (i ? "," : "") + std::to_string(cs[i]);
    return out;
}

/// Appends the pipeline's stage records to trace; variable tags them inside the finale.
inline MonochromaticSolution run_three_var(i64 c, i64 d, const Coloring& coloring, const ThreeVarOptions& opts,
                                           PipelineTrace& trace, std::size_t variable)
{
    if (c < 1)
        throw precondition_error("c must be positive");
    if (d == 0)
        throw precondition_error("d must be nonzero");
    auto tag = [&](Record& r) -> Record& {
        if (variable)
            r.add("var", variable);
        return r;
    };
    auto fail = [&](const std::string& stage, const std::string& why) {
        throw pipeline_error(stage, variable, "window too small for pipeline: " + why, trace);
    };

    const bool swapped = d < 0;
    const i64 dd = swapped ? checked_sub(0, d) : d;
    tag(trace.add("normalize")).add("c", c).add("d", d).add("d_used", dd).add("swapped", swapped);

    // (i) density split
    const int r = coloring.num_colors();
    const auto& w = coloring.window();
    Rational theta = opts.theta.value_or(Rational(1, 2 * static_cast<i64>(r)));
    i64 len = opts.analysis_length.value_or(w.size());
    if (len < 1 || len > w.size())
        throw precondition_error("analysis length must lie in 1.." + std::to_string(w.size()));
    std::vector<IntSet> classes;
    std::vector<Color> high;
    for (int ci = 1; ci <= r; ++ci) {
        classes.push_back(coloring.color_class(static_cast<Color>(ci)));
        auto st = banach_density(classes.back(), len);
        bool is_high = st.ratio >= theta;
        if (is_high)
            high.push_back(static_cast<Color>(ci));
        tag(trace.add("density"))
            .add("color", ci)
            .add("n", len)
            .add("count", st.count)
            .add("ratio", st.ratio.to_string())
            .add("theta", theta.to_string())
            .add("high", is_high);
    }
    if (high.empty())
        fail("density", "no color class reaches density " + theta.to_string());

    // (ii) union of high-density classes
    auto dset = IntSet::from_predicate(w, [&](i64 n) {
        return std::find(high.begin(), high.end(), coloring.color_of(n)) != high.end();
    });
    auto dstat = banach_density(dset, len);
    tag(trace.add("union")).add("colors", color_list(high)).add("count", dstat.count).add("ratio", dstat.ratio.to_string());

    // (iii) Delta witness inside D, then a monochromatic Delta subset
    auto xs = thick_delta_sequence(dset, opts.max_thick);
    tag(trace.add("thick")).add("size", xs.size()).add("x", join_ints(xs));
    if (xs.size() < 2)
        fail("thick", "D holds no interval of length " + std::to_string(xs.empty() ? 2 : xs.back() + 2));
    IntSet xset(Window{xs.front(), xs.back()}, xs);

    for (std::size_t s = xs.size(); s >= 2; --s) {
        auto mono = ramsey_mono_delta(xset, coloring, s);
        if (!mono)
            continue;
        auto wm = mono->subset.members();
        const IntSet& ci = classes[static_cast<std::size_t>(mono->color) - 1];
        tag(trace.add("ramsey")).add("size", s).add("color", static_cast<int>(mono->color)).add("w", join_ints(wm));
        if (ci.size() < 2)
            continue;

        // (iv) common difference of c·C_i and d·W
        auto hit = delta_intersection(ci.dilate(c), mono->subset.dilate(dd));
        if (!hit) {
            tag(trace.add("intersection")).add("size", s).add("found", false);
            continue;
        }
        tag(trace.add("intersection"))
            .add("size", s)
            .add("found", true)
            .add("d", hit->d)
            .add("a", std::to_string(hit->in_a.first) + "," + std::to_string(hit->in_a.second))
            .add("w", std::to_string(hit->in_x.first) + "," + std::to_string(hit->in_x.second));

        // (v) c·a' - c·a = d·(w' - w)
        i64 a1 = hit->in_a.second / c;
        i64 a2 = hit->in_a.first / c;
        i64 a3 = (hit->in_x.second - hit->in_x.first) / dd;
        if (swapped)
            std::swap(a1, a2);
        MonochromaticSolution sol{{a1, a2, a3}, mono->color, false};
        LinearEquation eq({c, checked_sub(0, c), checked_sub(0, d)});
        auto why = check_mono_solution(eq, sol, &coloring);
        if (!why.empty())
            throw error("internal: pipeline output does not verify: " + why);
        tag(trace.add("assemble"))
            .add("x", a1)
            .add("y", a2)
            .add("z", a3)
            .add("color", static_cast<int>(sol.color));
        return sol;
    }
    fail("intersection", "no monochromatic Delta subset meets the dilated color class");
    return {};  // unreachable
}

}  // namespace detail

inline ThreeVarResult solve_three_var(i64 c, i64 d, const Coloring& coloring, const ThreeVarOptions& opts = {})
{
    ThreeVarResult out;
    out.solution = detail::run_three_var(c, d, coloring, opts, out.trace, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Substitution and the end-to-end solver

/// Coefficients of eq(x_1, ..., x_{k-1}, x_k + q·x_{k+1}), scaled by den(c_k·q).
inline LinearEquation compose_q(const LinearEquation& eq, const Rational& q)
{
    if (q == Rational(0))
        throw precondition_error("q must be nonzero");
    Rational last = Rational(eq.coeffs().back()) * q;
    std::vector<i64> out;
    for (i64 c : eq.coeffs())
        out.push_back(checked_mul(c, last.den()));
    out.push_back(last.num());
    return LinearEquation(std::move(out));
}

struct Reindexing {
    RadoSubset subset;
    std::vector<std::size_t> order;  // order[j] = original 1-based index of reindexed variable j+1
    LinearEquation permuted;
};

/// Rado subset first (ascending), then the remaining variables ascending.
inline Reindexing reindex_for_finale(const LinearEquation& eq)
{
    auto subset = rado_condition(eq);
    if (!subset)
        throw rado_condition_absent_error(eq);
    std::vector<std::size_t> order = subset->indices;
    for (std::size_t i = 1; i <= eq.k(); ++i)
        if (std::find(order.begin(), order.end(), i) == order.end())
            order.push_back(i);
    std::vector<i64> c;
    for (auto i : order)
        c.push_back(eq.coeff(i));
    return {*subset, order, LinearEquation(std::move(c))};
}

/// Equations produced by iterating compose_q from the zero-sum prefix with
/// q = c_{j}/c_{j-1}; the last one is a positive multiple of the permuted equation.
inline std::vector<LinearEquation> finale_compositions(const LinearEquation& permuted, std::size_t m)
{
    if (m < 1 || m > permuted.k())
        throw precondition_error("prefix length out of range");
    const auto& c = permuted.coeffs();
    std::vector<LinearEquation> chain{LinearEquation(std::vector<i64>(c.begin(), c.begin() + static_cast<long>(m)))};
    for (std::size_t j = m; j < c.size(); ++j)
        chain.push_back(compose_q(chain.back(), Rational(c[j], c[j - 1])));
    return chain;
}

struct FinaleOptions {
    ThreeVarOptions three;
    i64 max_extension_nodes = 10'000'000;
};

struct FinaleResult {
    MonochromaticSolution solution;
    PipelineTrace trace;
};

/// Re-derives the final assignment from the trace alone.
inline std::vector<i64> assignment_from_trace(const PipelineTrace& trace)
{
    auto reidx = trace.stage("reindex");
    auto prefix = trace.stage("prefix");
    if (reidx.size() != 1 || prefix.size() != 1)
        throw parse_error("trace needs exactly one reindex and one prefix record");
    auto order = split_ints(reidx.front()->at("order"));
    auto m = static_cast<std::size_t>(detail::parse_int(prefix.front()->at("m")));
    i64 value = detail::parse_int(prefix.front()->at("value"));
    if (m < 1 || m > order.size())
        throw parse_error("trace prefix length out of range");

    std::vector<i64> permuted(m, value);
    for (const auto* rec : trace.stage("extend")) {
        auto j = static_cast<std::size_t>(detail::parse_int(rec->at("j")));
        if (j != permuted.size() + 1)
            throw parse_error("trace extensions out of order");
        if (detail::parse_int(rec->at("b")) != permuted.back())
            throw parse_error("trace extension does not continue from the previous value");
        permuted.back() = detail::parse_int(rec->at("y"));
        permuted.push_back(detail::parse_int(rec->at("z")));
    }
    if (permuted.size() != order.size())
        throw parse_error("trace does not extend every variable");
    std::vector<i64> out(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        auto idx = static_cast<std::size_t>(order[j]);
        if (idx < 1 || idx > out.size())
            throw parse_error("trace order entry out of range");
        out[idx - 1] = permuted[j];
    }
    return out;
}

inline FinaleResult replay_finale(const LinearEquation& eq, const Coloring& coloring, const FinaleOptions& opts = {})
{
    FinaleResult out;
    auto& trace = out.trace;
    auto ri = reindex_for_finale(eq);
    const std::size_t k = eq.k();
    const std::size_t m = ri.subset.indices.size();
    const auto& c = ri.permuted.coeffs();

    std::vector<i64> order_vals(ri.order.begin(), ri.order.end());
    trace.add("reindex")
        .add("subset", ri.subset.to_string())
        .add("order", join_ints(order_vals))
        .add("permuted", ri.permuted.to_string());
    auto chain = finale_compositions(ri.permuted, m);
    for (std::size_t j = 1; j < chain.size(); ++j)
        trace.add("compose")
            .add("j", m + j)
            .add("q", Rational(c[m + j - 1], c[m + j - 2]).to_string())
            .add("equation", chain[j].to_string());

    std::vector<i64> values;  // reindexed assignment built so far
    Color color = 0;
    if (m == k) {
        // every constant tuple solves a zero-sum equation
        values.assign(k, coloring.window().lo);
        color = coloring.color_of(values.front());
        trace.add("prefix").add("m", m).add("value", values.front()).add("color", static_cast<int>(color));
    } else {
        // variable m+1 comes with a fresh x from the three-variable pipeline
        const i64 cm = c[m - 1];
        const i64 three_c = cm < 0 ? checked_sub(0, cm) : cm;
        const i64 three_d = cm < 0 ? checked_sub(0, c[m]) : c[m];
        auto first = detail::run_three_var(three_c, three_d, coloring, opts.three, trace, m + 1);
        color = first.color;
        values.assign(m, first.assignment[0]);
        trace.add("prefix").add("m", m).add("value", first.assignment[0]).add("color", static_cast<int>(color));
        trace.add("extend")
            .add("j", m + 1)
            .add("c", three_c)
            .add("d", three_d)
            .add("b", first.assignment[0])
            .add("y", first.assignment[1])
            .add("z", first.assignment[2]);
        values.back() = first.assignment[1];
        values.push_back(first.assignment[2]);

        // later variables: x is pinned to the previous value, so y and z are
        // searched inside the same color class, backtracking across steps
        if (values.size() < k) {
            auto cls = coloring.color_class(color).members();
            i64 nodes = 0;
            std::vector<std::array<i64, 5>> steps;  // j, c, d, y, z
            std::function<bool(std::size_t, i64)> extend = [&](std::size_t j, i64 b) {
                if (j > k)
                    return true;
                const i64 prev = c[j - 2];
                const i64 cc = prev < 0 ? -prev : prev;
                const i64 dd = prev < 0 ? checked_sub(0, c[j - 1]) : c[j - 1];
                for (i64 y : cls) {
                    if (++nodes > opts.max_extension_nodes)
                        throw pipeline_error("extend", j, "extension budget exhausted", trace);
                    __int128 num = static_cast<__int128>(cc) * (b - y);
                    if (num % dd != 0)
                        continue;
                    __int128 z = num / dd;
                    if (z < 1 || z > coloring.window().hi || coloring.color_of(static_cast<i64>(z)) != color)
                        continue;
                    steps.push_back({static_cast<i64>(j), cc, dd, y, static_cast<i64>(z)});
                    if (extend(j + 1, static_cast<i64>(z)))
                        return true;
                    steps.pop_back();
                }
                return false;
            };
            if (!extend(m + 2, values.back()))
                throw pipeline_error("extend", m + 2, "no completion inside color " + std::to_string(color), trace);
            for (const auto& s : steps) {
                trace.add("extend").add("j", s[0]).add("c", s[1]).add("d", s[2]).add("b", values.back()).add("y", s[3]).add("z", s[4]);
                values.back() = s[3];
                values.push_back(s[4]);
            }
        }
    }

    std::vector<i64> assignment(k);
    for (std::size_t j = 0; j < k; ++j)
        assignment[ri.order[j] - 1] = values[j];
    out.solution = MonochromaticSolution{assignment, color, false};
    auto why = check_mono_solution(eq, out.solution, &coloring);
    if (!why.empty())
        throw error("internal: finale output does not verify: " + why);
    trace.add("result").add("assignment", join_ints(assignment)).add("color", static_cast<int>(color));
    if (assignment_from_trace(trace) != assignment)
        throw error("internal: trace does not reproduce the assignment");
    return out;
}

}  // namespace radokit
