#pragma once

// Finitary partition-regularity engine: backtracking over colorings of [1, n]
// in value order with canonical (first-use) color symmetry breaking.
//
// Constraints are the value sets {n_1, ..., n_k} of solutions, bucketed by
// their maximum. Coloring value v with color c is rejected when some set in
// bucket v has every other element already colored c, so each assignment only
// tests the sets it completes.

#include "radokit/certificate.hpp"
#include "radokit/parallel.hpp"

#include <atomic>
#include <memory>
#include <mutex>

namespace radokit {

/// Solution value sets of eq inside [1, limit], grouped by their second-largest
/// element (the "trigger"). When the trigger is colored, every element of a set
/// except its maximum is colored, so the maximum can be forbidden that color if
/// the rest is monochromatic. Buckets are built on first use; above
/// `stored_limit` total stored values later buckets are recomputed per request.
///
/// Row layout (width k): [max, other values ascending..., padded with trigger].
class SolutionIndex {
public:
    static constexpr std::size_t default_stored_limit = std::size_t{1} << 25;

    SolutionIndex(LinearEquation eq, bool distinct, i64 limit, std::size_t stored_limit = default_stored_limit)
        : eq_(std::move(eq)),
          distinct_(distinct),
          limit_(limit),
          width_(eq_.k()),
          stored_limit_(stored_limit),
          buckets_(static_cast<std::size_t>(std::max<i64>(limit, 0)) + 1)
    {
        if (limit < 0)
            throw precondition_error("negative index limit");
        for (auto& b : buckets_)
            b.store(nullptr, std::memory_order_relaxed);
    }

    const LinearEquation& equation() const { return eq_; }
    bool distinct() const { return distinct_; }
    i64 limit() const { return limit_; }
    std::size_t width() const { return width_; }

    /// Every constant tuple is a solution, so no value can be colored at all.
    bool constant_solutions() const { return !distinct_ && eq_.coefficient_sum() == 0; }

    /// Rows of bucket v. `scratch` backs the result when v is past the stored prefix.
    std::span<const std::int32_t> bucket(i64 v, std::vector<std::int32_t>& scratch) const
    {
        if (v < 1 || v > limit_)
            throw precondition_error("bucket " + std::to_string(v) + " outside index");
        auto idx = static_cast<std::size_t>(v);
        if (const auto* b = buckets_[idx].load(std::memory_order_acquire))
            return *b;
        std::lock_guard lock(mutex_);
        if (const auto* b = buckets_[idx].load(std::memory_order_acquire))
            return *b;
        auto rows = build_bucket(v);
        if (stored_ + rows.size() <= stored_limit_) {
            stored_ += rows.size();
            auto owned = std::make_unique<std::vector<std::int32_t>>(std::move(rows));
            buckets_[idx].store(owned.get(), std::memory_order_release);
            storage_.push_back(std::move(owned));
            return *buckets_[idx].load(std::memory_order_acquire);
        }
        scratch = std::move(rows);
        return scratch;
    }

    std::size_t stored_values() const
    {
        std::lock_guard lock(mutex_);
        return stored_;
    }

    /// Value sets (ascending, deduplicated) triggered by v.
    std::vector<std::vector<i64>> sets_triggered_by(i64 v) const
    {
        std::vector<std::int32_t> scratch;
        auto rows = bucket(v, scratch);
        std::vector<std::vector<i64>> out;
        for (std::size_t off = 0; off < rows.size(); off += width_) {
            std::vector<i64> set(rows.begin() + static_cast<std::ptrdiff_t>(off),
                                 rows.begin() + static_cast<std::ptrdiff_t>(off + width_));
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
            out.push_back(std::move(set));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    // Tuples with coordinate p equal to v, a nonempty set Q of coordinates equal
    // to a common maximum w in (v, limit], and the rest in [1, v].
    template <class Emit>
    void enumerate_triggered(i64 v, Emit&& emit) const
    {
        const std::size_t k = eq_.k();
        if (k < 2 || v >= limit_)
            return;
        const auto& c = eq_.coeffs();
        std::vector<i64> tuple(k);
        for (std::size_t p = 0; p < k; ++p) {
            for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
                if (mask & (1U << p))
                    continue;
                std::vector<std::size_t> free;
                __int128 top_coeff = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    if (mask & (1U << j))
                        top_coeff += c[j];
                    else if (j != p)
                        free.push_back(j);
                }
                // bounds over free[i..] (values in [1, v]) and the top group
                std::vector<__int128> lo_rest(free.size() + 1), hi_rest(free.size() + 1);
                {
                    __int128 a = top_coeff * (v + 1), b = top_coeff * limit_;
                    lo_rest[free.size()] = std::min(a, b);
                    hi_rest[free.size()] = std::max(a, b);
                }
                for (std::size_t i = free.size(); i-- > 0;) {
                    __int128 a = c[free[i]], b = static_cast<__int128>(c[free[i]]) * v;
                    lo_rest[i] = lo_rest[i + 1] + std::min(a, b);
                    hi_rest[i] = hi_rest[i + 1] + std::max(a, b);
                }
                auto place_top = [&](i64 w) {
                    for (std::size_t j = 0; j < k; ++j)
                        if (mask & (1U << j))
                            tuple[j] = w;
                    emit(tuple);
                };
                tuple[p] = v;
                std::function<void(std::size_t, __int128)> rec = [&](std::size_t i, __int128 partial) {
                    if (partial + lo_rest[i] > 0 || partial + hi_rest[i] < 0)
                        return;
                    if (i == free.size()) {
                        if (top_coeff == 0) {
                            if (partial == 0)
                                for (i64 w = v + 1; w <= limit_; ++w)
                                    place_top(w);
                            return;
                        }
                        if (partial % top_coeff != 0)
                            return;
                        __int128 w = -partial / top_coeff;
                        if (w > v && w <= limit_)
                            place_top(static_cast<i64>(w));
                        return;
                    }
                    for (i64 x = 1; x <= v; ++x) {
                        tuple[free[i]] = x;
                        rec(i + 1, partial + static_cast<__int128>(c[free[i]]) * x);
                    }
                };
                rec(0, static_cast<__int128>(c[p]) * v);
            }
        }
    }

    std::vector<std::int32_t> build_bucket(i64 v) const
    {
        std::vector<std::vector<std::int32_t>> rows;
        enumerate_triggered(v, [&](const std::vector<i64>& t) {
            if (distinct_ && !pairwise_distinct(t))
                return;
            i64 top = *std::max_element(t.begin(), t.end());
            std::vector<std::int32_t> row{static_cast<std::int32_t>(top)};
            std::vector<std::int32_t> rest;
            for (i64 x : t)
                if (x != top)
                    rest.push_back(static_cast<std::int32_t>(x));
            std::sort(rest.begin(), rest.end());
            rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
            row.insert(row.end(), rest.begin(), rest.end());
            row.resize(width_, static_cast<std::int32_t>(v));
            rows.push_back(std::move(row));
        });
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::vector<std::int32_t> flat;
        flat.reserve(rows.size() * width_);
        for (auto& r : rows)
            flat.insert(flat.end(), r.begin(), r.end());
        return flat;
    }

    LinearEquation eq_;
    bool distinct_;
    i64 limit_;
    std::size_t width_;
    std::size_t stored_limit_;
    mutable std::vector<std::atomic<const std::vector<std::int32_t>*>> buckets_;
    mutable std::vector<std::unique_ptr<std::vector<std::int32_t>>> storage_;
    mutable std::size_t stored_ = 0;
    mutable std::mutex mutex_;
};

enum class SearchStatus { found, absent, budget_exceeded };

inline const char* to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

struct SearchOptions {
    std::uint64_t max_nodes = 2'000'000'000;
    unsigned workers = 1;
};

namespace detail {

/// Outcome of exploring one subtree of the canonical coloring tree.
struct DfsOutcome {
    i64 best_depth = 0;
    std::vector<Color> best;  // first coloring of [1, best_depth] met, 1-indexed slots
    bool reached_limit = false;
    bool exceeded = false;
    std::uint64_t nodes = 0;
};

class ColoringDfs {
public:
    ColoringDfs(const SolutionIndex& index, int r, i64 limit, std::uint64_t cap)
        : index_(index),
          r_(r),
          limit_(limit),
          cap_(cap),
          color_(static_cast<std::size_t>(limit) + 2, 0),
          forbid_((static_cast<std::size_t>(limit) + 2) * static_cast<std::size_t>(r + 1), 0),
          domain_(static_cast<std::size_t>(limit) + 2, r)
    {
    }

    /// Explores every canonical extension of `prefix` (colors of 1..prefix.size()).
    /// With `frontier_depth` set, stops descending there and records the prefix.
    DfsOutcome run(std::span<const Color> prefix, i64 frontier_depth = 0,
                   std::vector<std::vector<Color>>* frontier = nullptr)
    {
        out_ = {};
        frontier_depth_ = frontier_depth;
        frontier_ = frontier;
        int used = 0;
        i64 horizon = limit_;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            auto v = static_cast<i64>(i) + 1;
            color_[static_cast<std::size_t>(v)] = prefix[i];
            horizon = std::min(horizon, propagate(v, prefix[i]) - 1);
            used = std::max(used, prefix[i]);
        }
        out_.best_depth = static_cast<i64>(prefix.size());
        out_.best.assign(prefix.begin(), prefix.end());
        out_.reached_limit = out_.best_depth == limit_;
        if (!out_.reached_limit && !index_.constant_solutions())
            dfs(static_cast<i64>(prefix.size()) + 1, used, horizon);
        return std::move(out_);
    }

    /// Visit every canonical avoider of [1, limit] instead of stopping at the first.
    void visit_all(std::function<void(std::span<const Color>)> f) { on_full_ = std::move(f); }

private:
    std::uint8_t& forbid(i64 w, Color c)
    {
        return forbid_[static_cast<std::size_t>(w) * static_cast<std::size_t>(r_ + 1) + static_cast<std::size_t>(c)];
    }

    // Forbids c at the maximum of every set that coloring v with c leaves one
    // step from monochromatic. Returns the least value whose domain became
    // empty, or limit + 1.
    i64 propagate(i64 v, Color c)
    {
        auto rows = index_.bucket(v, scratch_);
        const std::size_t w = index_.width();
        i64 wiped = limit_ + 1;
        for (std::size_t off = 0; off < rows.size(); off += w) {
            bool mono = true;
            for (std::size_t j = 1; j < w; ++j)
                if (color_[static_cast<std::size_t>(rows[off + j])] != c) {
                    mono = false;
                    break;
                }
            if (!mono)
                continue;
            i64 top = rows[off];
            if (forbid(top, c) == 0) {
                forbid(top, c) = 1;
                trail_.push_back({top, c});
                if (--domain_[static_cast<std::size_t>(top)] == 0)
                    wiped = std::min(wiped, top);
            }
        }
        return wiped;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            auto [w, c] = trail_.back();
            trail_.pop_back();
            forbid(w, c) = 0;
            ++domain_[static_cast<std::size_t>(w)];
        }
    }

    // horizon: deepest level this branch can still reach, given wiped-out domains
    void dfs(i64 v, int used, i64 horizon)
    {
        const i64 depth = v - 1;
        if (depth > out_.best_depth) {
            out_.best_depth = depth;
            out_.best.assign(color_.begin() + 1, color_.begin() + 1 + depth);
            if (depth == limit_ && !on_full_) {
                out_.reached_limit = true;
                return;
            }
        }
        if (depth == limit_) {
            if (on_full_)
                on_full_(std::span<const Color>(color_.data() + 1, static_cast<std::size_t>(depth)));
            return;
        }
        if (frontier_ && depth == frontier_depth_) {
            frontier_->emplace_back(color_.begin() + 1, color_.begin() + 1 + depth);
            return;
        }
        const int top = std::min(r_, used + 1);
        for (Color c = 1; c <= top; ++c) {
            if (forbid(v, c) != 0)
                continue;
            if (++out_.nodes > cap_) {
                out_.exceeded = true;
                return;
            }
            color_[static_cast<std::size_t>(v)] = c;
            const std::size_t mark = trail_.size();
            const i64 reach = std::min(horizon, propagate(v, c) - 1);
            if (on_full_ ? reach == limit_ : reach > out_.best_depth)
                dfs(v + 1, std::max(used, c), reach);
            undo(mark);
            color_[static_cast<std::size_t>(v)] = 0;
            if (out_.reached_limit || out_.exceeded)
                return;
        }
    }

    const SolutionIndex& index_;
    int r_;
    i64 limit_;
    std::uint64_t cap_;
    std::vector<Color> color_;
    std::vector<std::uint8_t> forbid_;
    std::vector<int> domain_;
    std::vector<std::pair<i64, Color>> trail_;
    std::vector<std::int32_t> scratch_;
    DfsOutcome out_;
    i64 frontier_depth_ = 0;
    std::vector<std::vector<Color>>* frontier_ = nullptr;
    std::function<void(std::span<const Color>)> on_full_;
};

/// Depth of the top-level split. Depends only on (r, limit) so sequential and
/// parallel runs decompose the tree identically.
inline i64 split_depth(int r, i64 limit)
{
    i64 d = 6;
    if (r >= 2) {
        d = 1;
        for (i64 leaves = 1; leaves < 64; leaves *= r)
            ++d;
    }
    return std::min(d, limit);
}

struct TreeResult {
    SearchStatus status = SearchStatus::absent;  // found = reached the limit
    i64 best_depth = 0;
    std::vector<Color> best;
    std::uint64_t nodes = 0;
};

/// Explores the canonical coloring tree of [1, limit], stopping at the first
/// coloring of the whole range. Reports the deepest level reached and the first
/// coloring met at that level, which is the lexicographically least avoider of
/// [1, best_depth].
inline TreeResult explore_tree(const SolutionIndex& index, int r, i64 limit, const SearchOptions& opts)
{
    TreeResult res;
    const i64 d = split_depth(r, limit);
    std::vector<std::vector<Color>> frontier;
    ColoringDfs head(index, r, limit, opts.max_nodes);
    auto top = head.run({}, d, &frontier);
    res.nodes = top.nodes;
    res.best_depth = top.best_depth;
    res.best = top.best;
    if (top.exceeded) {
        res.status = SearchStatus::budget_exceeded;
        res.nodes = opts.max_nodes;
        return res;
    }
    if (top.reached_limit) {
        res.status = SearchStatus::found;
        return res;
    }

    const std::uint64_t remaining = opts.max_nodes - top.nodes;
    std::vector<DfsOutcome> outcomes(frontier.size());
    std::atomic<std::uint64_t> seq_spent{0};
    ordered_first_hit(frontier.size(), opts.workers, [&](std::size_t i) {
        // sequentially the cap shrinks as nodes are spent; in parallel every
        // task gets the full remainder and the reduction below decides
        std::uint64_t cap = opts.workers <= 1 ? remaining - seq_spent.load() : remaining;
        ColoringDfs dfs(index, r, limit, cap);
        outcomes[i] = dfs.run(frontier[i]);
        seq_spent += outcomes[i].nodes;
        return outcomes[i].reached_limit || outcomes[i].exceeded;
    });

    std::uint64_t spent = 0;
    for (auto& o : outcomes) {
        if (o.exceeded || spent + o.nodes > remaining) {
            res.status = SearchStatus::budget_exceeded;
            res.nodes = opts.max_nodes;
            return res;
        }
        spent += o.nodes;
        if (o.best_depth > res.best_depth) {
            res.best_depth = o.best_depth;
            res.best = std::move(o.best);
        }
        if (o.reached_limit) {
            res.status = SearchStatus::found;
            break;
        }
    }
    res.nodes = top.nodes + spent;
    return res;
}

inline Coloring coloring_from(std::span<const Color> colors, int r)
{
    return {Window{1, static_cast<i64>(colors.size())}, r, std::vector<Color>(colors.begin(), colors.end())};
}

}  // namespace detail

struct AvoidResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<AvoidingColoring> coloring;
    std::uint64_t nodes = 0;
};

/// First avoiding r-coloring of [1, n] in canonical lexicographic order.
inline AvoidResult has_avoiding_coloring(const LinearEquation& eq, int r, i64 n, bool distinct,
                                         const SearchOptions& opts = {})
{
    if (r < 1 || n < 1)
        throw precondition_error("has_avoiding_coloring needs r >= 1 and n >= 1");
    AvoidResult out;
    if (!distinct && eq.coefficient_sum() == 0)
        return out;  // every constant tuple solves eq, so no coloring avoids it
    SolutionIndex index(eq, distinct, n);
    auto tree = detail::explore_tree(index, r, n, opts);
    out.nodes = tree.nodes;
    out.status = tree.status;
    if (tree.status == SearchStatus::found) {
        AvoidingColoring ac{detail::coloring_from(tree.best, r), eq, distinct, true};
        if (first_mono_solution(eq, ac.coloring, distinct))
            throw error("internal: search produced a non-avoiding coloring");
        out.coloring = std::move(ac);
    }
    return out;
}

struct RadoNumberResult {
    SearchStatus status = SearchStatus::found;  // found: n_star set; absent: exceeds n_max
    std::optional<i64> n_star;
    std::optional<AvoidingColoring> witness_below;  // for n_star - 1 (or n_max when exceeded)
    std::uint64_t nodes = 0;
};

/// Least n such that every r-coloring of [1, n] has a monochromatic solution.
/// One tree walk serves every n: the deepest avoiding prefix is n_star - 1,
/// because restrictions of avoiders are avoiders.
inline RadoNumberResult rado_number(const LinearEquation& eq, int r, bool distinct, i64 n_max,
                                    const SearchOptions& opts = {})
{
    if (r < 1 || n_max < 1)
        throw precondition_error("rado_number needs r >= 1 and n_max >= 1");
    RadoNumberResult out;
    if (!distinct && eq.coefficient_sum() == 0) {
        out.n_star = 1;
        return out;
    }
    SolutionIndex index(eq, distinct, n_max);
    auto tree = detail::explore_tree(index, r, n_max, opts);
    out.nodes = tree.nodes;
    if (tree.status == SearchStatus::budget_exceeded) {
        out.status = SearchStatus::budget_exceeded;
        return out;
    }
    if (tree.best_depth > 0) {
        AvoidingColoring ac{detail::coloring_from(tree.best, r), eq, distinct, true};
        if (first_mono_solution(eq, ac.coloring, distinct))
            throw error("internal: search produced a non-avoiding coloring");
        out.witness_below = std::move(ac);
    }
    if (tree.status == SearchStatus::found) {
        out.status = SearchStatus::absent;
        return out;
    }
    out.status = SearchStatus::found;
    out.n_star = tree.best_depth + 1;
    return out;
}

/// Calls visit(colors) for every canonical avoiding coloring of [1, n], in
/// lexicographic order. Exhaustive; meant for small n.
template <class Visit>
void for_each_avoiding_coloring(const LinearEquation& eq, int r, i64 n, bool distinct, Visit&& visit)
{
    SolutionIndex index(eq, distinct, n);
    detail::ColoringDfs dfs(index, r, n, std::numeric_limits<std::uint64_t>::max());
    dfs.visit_all([&](std::span<const Color> colors) { visit(colors); });
    dfs.run({});
}

/// Monochromatic solutions in lexicographic order of assignment, up to limit.
inline std::vector<MonochromaticSolution> find_mono_solutions(const LinearEquation& eq, const Coloring& coloring,
                                                              bool distinct, std::size_t limit)
{
    std::vector<MonochromaticSolution> out;
    if (limit == 0)
        return out;
    detail::MonoScanner scanner(eq, coloring, distinct);
    scanner.scan(coloring.window().lo, coloring.window().hi, [&](MonochromaticSolution s) {
        out.push_back(std::move(s));
        return out.size() < limit;
    });
    return out;
}

}  // namespace radokit
