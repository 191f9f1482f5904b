#pragma once

// Lexicographic enumeration of monochromatic solutions of a linear equation
// over a colored window. All but the last variable are enumerated; the last is
// solved exactly. Partial sums are carried in 128 bits.

#include "radokit/core.hpp"

#include <array>

namespace radokit {

struct MonochromaticSolution {
    std::vector<i64> assignment;
    Color color = 0;
    bool distinct = false;

    friend bool operator==(const MonochromaticSolution&, const MonochromaticSolution&) = default;
};

namespace detail {

using i128 = __int128;

class MonoScanner {
public:
    MonoScanner(const LinearEquation& eq, const Coloring& coloring, bool distinct)
        : eq_(eq), coloring_(coloring), distinct_(distinct), classes_(static_cast<std::size_t>(coloring.num_colors()) + 1)
    {
        const auto& w = coloring.window();
        for (i64 n = w.lo; n <= w.hi; ++n)
            classes_[static_cast<std::size_t>(coloring.color_of(n))].push_back(n);
        assignment_.resize(eq.k());
    }

    /// Visits solutions whose first coordinate lies in [first_lo, first_hi], in
    /// lexicographic order. visit returns false to stop; scan returns false if stopped.
    template <class Visit>
    bool scan(i64 first_lo, i64 first_hi, Visit&& visit)
    {
        const auto& w = coloring_.window();
        first_lo = std::max(first_lo, w.lo);
        first_hi = std::min(first_hi, w.hi);
        const std::size_t k = eq_.k();
        for (i64 n1 = first_lo; n1 <= first_hi; ++n1) {
            Color c = coloring_.color_of(n1);
            const auto& cls = classes_[static_cast<std::size_t>(c)];
            lo_ = cls.front();
            hi_ = cls.back();
            compute_rest_bounds();
            assignment_[0] = n1;
            i128 partial = static_cast<i128>(eq_.coeffs()[0]) * n1;
            if (k == 1) {
                if (partial == 0 && !emit(c, visit))
                    return false;
                continue;
            }
            if (partial + min_rest_[1] > 0 || partial + max_rest_[1] < 0)
                continue;
            if (!descend(1, partial, c, cls, visit))
                return false;
        }
        return true;
    }

    const Coloring& coloring() const { return coloring_; }

private:
    void compute_rest_bounds()
    {
        const std::size_t k = eq_.k();
        min_rest_.assign(k + 1, 0);
        max_rest_.assign(k + 1, 0);
        for (std::size_t j = k; j-- > 0;) {
            i128 a = static_cast<i128>(eq_.coeffs()[j]) * lo_;
            i128 b = static_cast<i128>(eq_.coeffs()[j]) * hi_;
            min_rest_[j] = min_rest_[j + 1] + std::min(a, b);
            max_rest_[j] = max_rest_[j + 1] + std::max(a, b);
        }
    }

    template <class Visit>
    bool descend(std::size_t pos, i128 partial, Color c, const std::vector<i64>& cls, Visit& visit)
    {
        const std::size_t k = eq_.k();
        const i64 coeff = eq_.coeffs()[pos];
        if (pos == k - 1) {
            if (partial % coeff != 0)
                return true;
            i128 last = -partial / coeff;
            if (last < lo_ || last > hi_)
                return true;
            auto value = static_cast<i64>(last);
            if (coloring_.color_of(value) != c)
                return true;
            assignment_[pos] = value;
            return emit(c, visit);
        }
        for (i64 x : cls) {
            i128 t = partial + static_cast<i128>(coeff) * x;
            if (t + min_rest_[pos + 1] > 0) {
                if (coeff > 0)
                    break;
                continue;
            }
            if (t + max_rest_[pos + 1] < 0) {
                if (coeff < 0)
                    break;
                continue;
            }
            assignment_[pos] = x;
            if (!descend(pos + 1, t, c, cls, visit))
                return false;
        }
        return true;
    }

    template <class Visit>
    bool emit(Color c, Visit& visit)
    {
        if (distinct_ && !pairwise_distinct(assignment_))
            return true;
        return visit(MonochromaticSolution{assignment_, c, distinct_});
    }

    const LinearEquation& eq_;
    const Coloring& coloring_;
    bool distinct_;
    std::vector<std::vector<i64>> classes_;
    std::vector<i64> assignment_;
    std::vector<i128> min_rest_, max_rest_;
    i64 lo_ = 0, hi_ = 0;
};

}  // namespace detail

/// Lexicographically first monochromatic solution, if any.
inline std::optional<MonochromaticSolution> first_mono_solution(const LinearEquation& eq, const Coloring& coloring,
                                                                bool distinct)
{
    std::optional<MonochromaticSolution> found;
    detail::MonoScanner scanner(eq, coloring, distinct);
    scanner.scan(coloring.window().lo, coloring.window().hi, [&](MonochromaticSolution s) {
        found = std::move(s);
        return false;
    });
    return found;
}

/// Checks the invariants of a claimed monochromatic solution. Returns an empty
/// string when valid, otherwise the first violated invariant.
inline std::string check_mono_solution(const LinearEquation& eq, const MonochromaticSolution& sol,
                                       const Coloring* coloring)
{
    if (sol.assignment.size() != eq.k())
        return "assignment length " + std::to_string(sol.assignment.size()) + " != k=" + std::to_string(eq.k());
    for (i64 v : sol.assignment)
        if (v < 1)
            return "non-positive entry " + std::to_string(v);
    i64 value = 0;
    try {
        value = eval(eq, sol.assignment);
    } catch (const overflow_error&) {
        return "evaluation overflows";
    }
    if (value != 0)
        return "equation evaluates to " + std::to_string(value) + ", not 0";
    if (sol.distinct && !pairwise_distinct(sol.assignment))
        return "entries not pairwise distinct";
    if (coloring) {
        for (std::size_t i = 0; i < sol.assignment.size(); ++i) {
            i64 v = sol.assignment[i];
            if (!coloring->window().contains(v))
                return "x" + std::to_string(i + 1) + "=" + std::to_string(v) + " outside coloring window";
            if (coloring->color_of(v) != sol.color)
                return "x" + std::to_string(i + 1) + "=" + std::to_string(v) + " has color " +
                       std::to_string(coloring->color_of(v)) + ", expected " + std::to_string(sol.color);
        }
    }
    return {};
}

}  // namespace radokit
