#pragma once

// Finite-window analogs of thickness, syndeticity, piecewise syndeticity,
// Delta-sets and Banach density. Nothing here decides an infinitary property;
// every function states what it computes on the window it is given.
//
// Gap convention: a set A on [lo, hi] is padded with virtual members lo-1 and
// hi+1, so max_gap <= k means every k consecutive window integers meet A.

#include "radokit/core.hpp"

namespace radokit {

// ---------------------------------------------------------------------------
// Bitmap helper used by the clique searches. Offsets are 0-based.

namespace detail {

class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return i < n_ && ((w_[i >> 6] >> (i & 63)) & 1U); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto x : w_)
            c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    bool any() const
    {
        return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
    }

    /// Least set index >= from, or size() if none.
    std::size_t next(std::size_t from) const
    {
        if (from >= n_)
            return n_;
        std::size_t wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur != 0) {
                std::size_t i = wi * 64 + static_cast<std::size_t>(std::countr_zero(cur));
                return i < n_ ? i : n_;
            }
            if (++wi >= w_.size())
                return n_;
            cur = w_[wi];
        }
    }

    /// this & (other shifted up by `shift`), i.e. keeps i with other[i - shift].
    Bits and_shifted(const Bits& other, std::size_t shift) const
    {
        Bits out(n_);
        std::size_t ws = shift >> 6, bs = shift & 63;
        for (std::size_t wi = ws; wi < w_.size(); ++wi) {
            std::size_t src = wi - ws;
            std::uint64_t v = src < other.w_.size() ? other.w_[src] << bs : 0;
            if (bs != 0 && src >= 1 && src - 1 < other.w_.size())
                v |= other.w_[src - 1] >> (64 - bs);
            out.w_[wi] = w_[wi] & v;
        }
        out.trim();
        return out;
    }

private:
    void trim()
    {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline i64 max_gap_of(const IntSet& a, const Window& w)
{
    i64 prev = w.lo - 1;
    i64 gap = 0;
    a.for_each([&](i64 n) {
        if (!w.contains(n))
            return;
        gap = std::max(gap, n - prev);
        prev = n;
    });
    return std::max(gap, w.hi + 1 - prev);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Intervals and gaps

struct IntervalRun {
    i64 length = 0;
    i64 start = 0;
    friend bool operator==(const IntervalRun&, const IntervalRun&) = default;
};

/// Longest run of consecutive members, leftmost on ties.
inline IntervalRun longest_interval(const IntSet& a)
{
    if (a.empty())
        throw precondition_error("longest_interval of an empty set");
    IntervalRun best, cur;
    i64 prev = 0;
    a.for_each([&](i64 n) {
        if (cur.length > 0 && n == prev + 1) {
            ++cur.length;
        } else {
            cur = {1, n};
        }
        if (cur.length > best.length)
            best = cur;
        prev = n;
    });
    return best;
}

struct GapStat {
    i64 max_gap = 0;
    std::optional<i64> mult_gap;  // nullopt: no bound within the window
};

inline GapStat gap_stats(const IntSet& a)
{
    if (a.empty())
        throw precondition_error("gap_stats of an empty set");
    const auto& w = a.window();
    GapStat out;
    out.max_gap = detail::max_gap_of(a, w);

    // first_hit[x]: least j with j*x in A, j*x <= hi
    const i64 hi = w.hi;
    constexpr i64 none = std::numeric_limits<i64>::max();
    std::vector<i64> first_hit(static_cast<std::size_t>(hi) + 1, none);
    for (i64 x = 1; x <= hi; ++x)
        for (i64 j = 1; j * x <= hi; ++j)
            if (a.contains(j * x)) {
                first_hit[static_cast<std::size_t>(x)] = j;
                break;
            }
    std::vector<i64> prefix_max(static_cast<std::size_t>(hi) + 1, 0);
    for (i64 x = 1; x <= hi; ++x)
        prefix_max[static_cast<std::size_t>(x)] =
            std::max(prefix_max[static_cast<std::size_t>(x - 1)], first_hit[static_cast<std::size_t>(x)]);
    for (i64 k = 1; k <= hi; ++k) {
        if (prefix_max[static_cast<std::size_t>(hi / k)] <= k) {
            out.mult_gap = k;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Delta-sets

/// All positive pairwise differences, on the window [1, max - min].
inline IntSet delta_set(const IntSet& x)
{
    auto m = x.members();
    if (m.size() < 2)
        throw precondition_error("delta_set needs at least two elements");
    Window w{1, m.back() - m.front()};
    detail::Bits bits(static_cast<std::size_t>(w.hi) + 1);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            bits.set(static_cast<std::size_t>(m[j] - m[i]));
    return IntSet::from_predicate(w, [&](i64 d) { return bits.test(static_cast<std::size_t>(d)); });
}

namespace detail {

// Lexicographically least clique of size s among vertices 0..n-1 where u < v
// are adjacent iff diff_ok[v - u]. Vertices ascending, bounded by candidate count.
inline bool difference_clique(const Bits& diff_ok, const Bits& cand, std::size_t s, std::vector<std::size_t>& chosen)
{
    if (chosen.size() == s)
        return true;
    if (chosen.size() + cand.count() < s)
        return false;
    for (std::size_t v = cand.next(0); v < cand.size(); v = cand.next(v + 1)) {
        Bits next = cand.and_shifted(diff_ok, v);
        chosen.push_back(v);
        if (difference_clique(diff_ok, next, s, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

/// Least X (lexicographically) inside A's window with |X| = s and Delta(X) in A.
inline std::optional<IntSet> delta_large_witness(const IntSet& a, std::size_t s)
{
    if (s < 2)
        throw precondition_error("delta_large_witness needs s >= 2");
    const auto& w = a.window();
    const auto n = static_cast<std::size_t>(w.size());
    detail::Bits diff_ok(n), all(n);
    for (std::size_t d = 0; d < n; ++d) {
        all.set(d);
        if (a.contains(static_cast<i64>(d)))
            diff_ok.set(d);
    }
    std::vector<std::size_t> chosen;
    if (!detail::difference_clique(diff_ok, all, s, chosen))
        return std::nullopt;
    std::vector<i64> members;
    for (auto v : chosen)
        members.push_back(w.lo + static_cast<i64>(v));
    return IntSet(w, members);
}

/// Runs the thick-set recursion: x1 = min T, then x_{n+1} = y + x_n + 1 for the
/// least y with [y, y + x_n + 1] inside T. Stops after max_size elements or when
/// no interval qualifies; the result is always a prefix of the full recursion.
inline std::vector<i64> thick_delta_sequence(const IntSet& t, std::size_t max_size)
{
    std::vector<i64> xs;
    auto first = t.min();
    if (!first || max_size == 0)
        return xs;
    xs.push_back(*first);
    const auto& w = t.window();
    while (xs.size() < max_size) {
        const i64 need = xs.back() + 2;  // interval [y, y'] with y' - y = x_n + 1
        i64 run = 0;
        std::optional<i64> found;
        for (i64 n = w.lo; n <= w.hi; ++n) {
            run = t.contains(n) ? run + 1 : 0;
            if (run >= need) {
                found = n;  // y' = n, y = n - x_n - 1
                break;
            }
        }
        if (!found)
            break;
        xs.push_back(*found);
    }
    return xs;
}

class window_exhausted_error : public error {
public:
    window_exhausted_error(std::size_t reached, std::size_t wanted)
        : error("window exhausted after " + std::to_string(reached) + " of " + std::to_string(wanted) + " elements"),
          reached_(reached)
    {
    }
    std::size_t reached() const { return reached_; }

private:
    std::size_t reached_;
};

inline IntSet thick_delta_witness(const IntSet& t, std::size_t s)
{
    auto xs = thick_delta_sequence(t, s);
    if (xs.size() < s)
        throw window_exhausted_error(xs.size(), s);
    IntSet out(Window{xs.front(), xs.back()}, xs);
    if (s >= 2 && !delta_set(out).is_subset_of(t))
        throw error("internal: thick recursion produced a difference outside T");
    return out;
}

struct MonoDelta {
    IntSet subset;
    Color color = 0;
};

/// Lexicographically least X' in X with |X'| = s whose differences share one color.
inline std::optional<MonoDelta> ramsey_mono_delta(const IntSet& x, const Coloring& coloring, std::size_t s)
{
    if (s < 2)
        throw precondition_error("ramsey_mono_delta needs s >= 2");
    auto m = x.members();
    if (m.size() < 2)
        return std::nullopt;
    i64 min_diff = std::numeric_limits<i64>::max();
    for (std::size_t i = 1; i < m.size(); ++i)
        min_diff = std::min(min_diff, m[i] - m[i - 1]);
    if (!coloring.window().contains(min_diff) || !coloring.window().contains(m.back() - m.front()))
        throw precondition_error("Delta(X) is not inside the coloring window");

    const std::size_t n = m.size();
    auto col = [&](std::size_t i, std::size_t j) { return coloring.color_of(m[j] - m[i]); };
    std::vector<std::size_t> chosen;

    // extend the current clique with candidates (ascending), all edges in color c
    std::function<bool(const std::vector<std::size_t>&, Color)> grow = [&](const std::vector<std::size_t>& cand,
                                                                          Color c) {
        if (chosen.size() == s)
            return true;
        if (chosen.size() + cand.size() < s)
            return false;
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            std::size_t v = cand[idx];
            std::vector<std::size_t> next;
            for (std::size_t t = idx + 1; t < cand.size(); ++t)
                if (col(v, cand[t]) == c)
                    next.push_back(cand[t]);
            chosen.push_back(v);
            if (grow(next, c))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Color c = col(i, j);
            std::vector<std::size_t> cand;
            for (std::size_t t = j + 1; t < n; ++t)
                if (col(i, t) == c && col(j, t) == c)
                    cand.push_back(t);
            chosen = {i, j};
            if (grow(cand, c)) {
                std::vector<i64> members;
                for (auto idx : chosen)
                    members.push_back(m[idx]);
                return MonoDelta{IntSet(x.window(), members), c};
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Banach density at a fixed interval length

struct DensityStat {
    i64 n = 0;
    i64 best_start = 0;  // interval is [best_start + 1, best_start + n]
    i64 count = 0;
    Rational ratio;
};

/// Exact max of |A ∩ [x+1, x+n]| over placements inside A's window, leftmost x.
inline DensityStat banach_density(const IntSet& a, i64 n)
{
    const auto& w = a.window();
    if (n < 1)
        throw precondition_error("interval length must be positive");
    if (w.size() < n)
        throw precondition_error("window shorter than interval length " + std::to_string(n));
    i64 count = 0;
    for (i64 v = w.lo; v < w.lo + n; ++v)
        count += a.contains(v) ? 1 : 0;
    DensityStat best{n, w.lo - 1, count, {}};
    for (i64 x = w.lo; x + n <= w.hi; ++x) {
        count += (a.contains(x + n) ? 1 : 0) - (a.contains(x) ? 1 : 0);
        if (count > best.count) {
            best.count = count;
            best.best_start = x;
        }
    }
    best.ratio = Rational(best.count, n);
    return best;
}

struct ShiftCounts {
    std::vector<i64> counts;  // |(A - x_i) ∩ I|
    i64 union_count = 0;      // |⋃ (A - x_i) ∩ I|
};

inline ShiftCounts shift_union_count(const IntSet& a, std::span<const i64> shifts, Window probe)
{
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (i > 0 && shifts[i] <= shifts[i - 1])
            throw precondition_error("shifts must be strictly increasing");
        if (shifts[i] < 0)
            throw precondition_error("shifts must be non-negative");
        if (!a.window().contains(Window{probe.lo + shifts[i], probe.hi + shifts[i]}))
            throw precondition_error("probe shifted by " + std::to_string(shifts[i]) + " leaves the window");
    }
    ShiftCounts out;
    out.counts.assign(shifts.size(), 0);
    for (i64 y = probe.lo; y <= probe.hi; ++y) {
        bool hit = false;
        for (std::size_t i = 0; i < shifts.size(); ++i)
            if (a.contains(y + shifts[i])) {
                ++out.counts[i];
                hit = true;
            }
        out.union_count += hit ? 1 : 0;
    }
    return out;
}

struct DeltaIntersection {
    i64 d = 0;
    std::pair<i64, i64> in_a;  // a' - a = d
    std::pair<i64, i64> in_x;  // x_j - x_i = d
};

/// Scans pairs x_i < x_j of X in lexicographic order for a shared element of
/// (A - x_i) and (A - x_j); the least such y = a - x_i gives the witnesses.
inline std::optional<DeltaIntersection> delta_intersection(const IntSet& a, const IntSet& x)
{
    if (a.size() < 2 || x.size() < 2)
        throw precondition_error("delta_intersection needs |A| >= 2 and |X| >= 2");
    auto am = a.members();
    auto xm = x.members();
    for (std::size_t i = 0; i < xm.size(); ++i)
        for (std::size_t j = i + 1; j < xm.size(); ++j) {
            i64 d = xm[j] - xm[i];
            for (i64 v : am)
                if (a.contains(v + d))
                    return DeltaIntersection{d, {v, v + d}, {xm[i], xm[j]}};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Piecewise-syndetic piece selection

struct PsStep {
    std::size_t parts = 0;   // number of parts still in play
    i64 remainder_gap = 0;   // max_gap of S minus the union of the first parts-1 parts
    bool syndetic = false;   // remainder_gap <= threshold
};

struct PsSelection {
    std::size_t index = 0;  // 1-based
    std::vector<PsStep> steps;
};

/// Replays the two-case induction: with C' the union of all parts but the last,
/// pick the last part when S \ C' is k'-syndetic on the window, else recurse on C'.
inline PsSelection select_ps_piece(const IntSet& s, const IntSet& t, std::span<const IntSet> parts, i64 k,
                                   std::optional<i64> k_prime = std::nullopt)
{
    if (parts.empty())
        throw precondition_error("select_ps_piece needs at least one part");
    if (s.empty())
        throw precondition_error("S is empty");
    const auto& w = s.window();
    if (detail::max_gap_of(s, w) > k)
        throw precondition_error("S is not " + std::to_string(k) + "-syndetic on its window");

    auto st = IntSet::from_predicate(w, [&](i64 n) { return s.contains(n) && t.contains(n); });
    std::vector<int> owner(static_cast<std::size_t>(w.size()), 0);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        bool ok = true;
        parts[p].for_each([&](i64 n) {
            if (!st.contains(n)) {
                ok = false;
                return;
            }
            auto& o = owner[static_cast<std::size_t>(n - w.lo)];
            if (o != 0)
                ok = false;
            o = static_cast<int>(p) + 1;
        });
        if (!ok)
            throw precondition_error("parts do not partition S ∩ T (part " + std::to_string(p + 1) + ")");
    }
    st.for_each([&](i64 n) {
        if (owner[static_cast<std::size_t>(n - w.lo)] == 0)
            throw precondition_error("parts do not cover S ∩ T (missing " + std::to_string(n) + ")");
    });

    const i64 threshold = k_prime.value_or(k);
    PsSelection out;
    for (std::size_t r = parts.size(); r >= 2; --r) {
        // C' = parts 1..r-1
        auto rest = IntSet::from_predicate(w, [&](i64 n) {
            if (!s.contains(n))
                return false;
            int o = owner[static_cast<std::size_t>(n - w.lo)];
            return o == 0 || static_cast<std::size_t>(o) >= r;
        });
        i64 gap = rest.empty() ? w.size() + 1 : detail::max_gap_of(rest, w);
        bool syndetic = gap <= threshold;
        out.steps.push_back({r, gap, syndetic});
        if (syndetic) {
            out.index = r;
            return out;
        }
    }
    out.steps.push_back({1, 0, true});
    out.index = 1;
    return out;
}

}  // namespace radokit
