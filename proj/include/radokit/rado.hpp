#pragma once

#include "radokit/certificate.hpp"
#include "radokit/parallel.hpp"

namespace radokit {

namespace detail {

inline bool rado_dfs(const std::vector<i64>& c, std::size_t start, i64 sum, std::vector<std::size_t>& path)
{
    for (std::size_t j = start; j < c.size(); ++j) {
        path.push_back(j + 1);
        i64 s = sum + c[j];
        if (s == 0 || rado_dfs(c, j + 1, s, path))
            return true;
        path.pop_back();
    }
    return false;
}

inline std::vector<i64> subset_sums(std::span<const i64> values)
{
    std::vector<i64> sums{0};
    for (i64 v : values) {
        std::size_t n = sums.size();
        sums.reserve(n * 2);
        for (std::size_t i = 0; i < n; ++i)
            sums.push_back(sums[i] + v);
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return sums;
}

/// Does some (possibly empty) subset of values sum to target? Meet in the middle.
inline bool subset_sum_exists(std::span<const i64> values, i64 target)
{
    std::size_t half = values.size() / 2;
    auto left = subset_sums(values.subspan(0, half));
    auto right = subset_sums(values.subspan(half));
    for (i64 s : right)
        if (std::binary_search(left.begin(), left.end(), target - s))
            return true;
    return false;
}

/// Lexicographically least zero-sum index sequence, built greedily from an
/// existence oracle over the remaining suffix.
inline std::optional<std::vector<std::size_t>> rado_mitm(const std::vector<i64>& c)
{
    std::vector<std::size_t> path;
    i64 sum = 0;
    std::size_t start = 0;
    while (true) {
        if (!path.empty() && sum == 0)
            return path;
        bool extended = false;
        for (std::size_t j = start; j < c.size(); ++j) {
            i64 s = sum + c[j];
            std::span<const i64> rest(c.data() + j + 1, c.size() - j - 1);
            if (s == 0 || subset_sum_exists(rest, -s)) {
                path.push_back(j + 1);
                sum = s;
                start = j + 1;
                extended = true;
                break;
            }
        }
        if (!extended)
            return std::nullopt;
    }
}

}  // namespace detail

inline constexpr std::size_t mitm_threshold = 24;

/// Lexicographically least nonempty I with sum_{i in I} c_i = 0, if one exists.
inline std::optional<RadoSubset> rado_condition(const LinearEquation& eq)
{
    const auto& c = eq.coeffs();
    if (c.size() > mitm_threshold) {
        auto path = detail::rado_mitm(c);
        if (!path)
            return std::nullopt;
        return RadoSubset{*path};
    }
    std::vector<std::size_t> path;
    if (detail::rado_dfs(c, 0, 0, path))
        return RadoSubset{path};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive verification

/// Lexicographically first monochromatic solution, or nullopt when the
/// coloring is solution-free. The first coordinate is split into chunks that
/// workers scan independently; the least chunk with a hit wins.
inline std::optional<MonochromaticSolution> verify_no_mono_solution(const LinearEquation& eq, const Coloring& coloring,
                                                                    bool distinct, unsigned workers = 1)
{
    if (workers <= 1)
        return first_mono_solution(eq, coloring, distinct);

    const auto& w = coloring.window();
    const i64 chunks = std::min<i64>(w.size(), static_cast<i64>(workers) * 8);
    const i64 step = (w.size() + chunks - 1) / chunks;
    std::vector<std::optional<MonochromaticSolution>> hits(static_cast<std::size_t>(chunks));

    ordered_first_hit(static_cast<std::size_t>(chunks), workers, [&](std::size_t idx) {
        i64 a = w.lo + static_cast<i64>(idx) * step;
        i64 b = std::min(w.hi, a + step - 1);
        detail::MonoScanner scanner(eq, coloring, distinct);
        scanner.scan(a, b, [&](MonochromaticSolution s) {
            hits[idx] = std::move(s);
            return false;
        });
        return hits[idx].has_value();
    });
    for (auto& h : hits)
        if (h)
            return h;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Necessity colorings

class partition_regular_error : public error {
public:
    explicit partition_regular_error(RadoSubset subset)
        : error("equation is partition regular (I=" + subset.to_string() + ")"), subset_(std::move(subset))
    {
    }
    const RadoSubset& subset() const { return subset_; }

private:
    RadoSubset subset_;
};

class unsuitable_prime_error : public error {
public:
    unsuitable_prime_error(i64 p, MonochromaticSolution counterexample)
        : error("unsuitable prime " + std::to_string(p)), p_(p), counterexample_(std::move(counterexample))
    {
    }
    i64 prime() const { return p_; }
    const MonochromaticSolution& counterexample() const { return counterexample_; }

private:
    i64 p_;
    MonochromaticSolution counterexample_;
};

struct NecessityColoring {
    i64 prime = 2;
    Coloring coloring;
    i64 verified_bound = 0;
    bool distinct = false;
};

inline bool is_prime(i64 p)
{
    if (p < 2)
        return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Last nonzero digit of n in base p.
inline Color last_nonzero_digit(i64 n, i64 p)
{
    while (n % p == 0)
        n /= p;
    return static_cast<Color>(n % p);
}

inline Coloring digit_coloring(i64 p, Window window)
{
    if (!is_prime(p))
        throw precondition_error(std::to_string(p) + " is not prime");
    return Coloring::from_function(window, static_cast<int>(p - 1),
                                   [&](i64 n) { return last_nonzero_digit(n, p); });
}

inline NecessityColoring necessity_coloring(const LinearEquation& eq, i64 p, Window window, bool distinct = false,
                                            unsigned workers = 1)
{
    if (auto subset = rado_condition(eq))
        throw partition_regular_error(*subset);
    auto coloring = digit_coloring(p, window);
    if (auto hit = verify_no_mono_solution(eq, coloring, distinct, workers))
        throw unsuitable_prime_error(p, *hit);
    return {p, std::move(coloring), window.hi, distinct};
}

/// Tries primes in increasing order up to max_prime; first that verifies wins.
inline NecessityColoring auto_necessity_coloring(const LinearEquation& eq, Window window, bool distinct = false,
                                                 i64 max_prime = 13, unsigned workers = 1)
{
    std::optional<unsuitable_prime_error> last;
    for (i64 p = 2; p <= max_prime; ++p) {
        if (!is_prime(p))
            continue;
        try {
            return necessity_coloring(eq, p, window, distinct, workers);
        } catch (const unsuitable_prime_error& e) {
            last = e;
        }
    }
    if (last)
        throw *last;
    throw precondition_error("no prime <= " + std::to_string(max_prime));
}

}  // namespace radokit
