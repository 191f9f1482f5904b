#pragma once

// Domain types shared by every module: checked arithmetic, windows, bit-indexed
// integer sets, colorings, linear equations, exact rationals and parsing.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace radokit {

using i64 = std::int64_t;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class parse_error : public error {
public:
    using error::error;
};

class overflow_error : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

inline constexpr i64 max_coefficient = i64{1} << 31;

inline i64 checked_add(i64 a, i64 b)
{
    i64 out;
    if (__builtin_add_overflow(a, b, &out))
        throw overflow_error("integer overflow in addition");
    return out;
}

inline i64 checked_sub(i64 a, i64 b)
{
    i64 out;
    if (__builtin_sub_overflow(a, b, &out))
        throw overflow_error("integer overflow in subtraction");
    return out;
}

inline i64 checked_mul(i64 a, i64 b)
{
    i64 out;
    if (__builtin_mul_overflow(a, b, &out))
        throw overflow_error("integer overflow in multiplication");
    return out;
}

// ---------------------------------------------------------------------------
// Rational

class Rational {
public:
    Rational() = default;
    Rational(i64 num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(i64 num, i64 den)
    {
        if (den == 0)
            throw precondition_error("rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        i64 g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        i64 g = std::gcd(a.den_, b.den_);
        i64 lhs = checked_mul(a.num_, b.den_ / g);
        i64 rhs = checked_mul(b.num_, a.den_ / g);
        return {checked_add(lhs, rhs), checked_mul(a.den_, b.den_ / g)};
    }
    friend Rational operator-(const Rational& a) { return {checked_sub(0, a.num_), a.den_}; }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        i64 g1 = std::gcd(a.num_, b.den_);
        i64 g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        return {checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1)};
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0)
            throw precondition_error("division by zero rational");
        return a * Rational(b.den_, b.num_);
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b)
    {
        // cross-multiplication in 128 bits cannot overflow
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(std::string_view text);

private:
    i64 num_ = 0;
    i64 den_ = 1;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline i64 parse_int(std::string_view s)
{
    s = trim(s);
    if (s.empty())
        throw parse_error("expected integer, got empty text");
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw parse_error("expected digits after sign");
    i64 value = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw parse_error("invalid character '" + std::string(1, ch) + "' in integer");
        value = checked_add(checked_mul(value, 10), ch - '0');
    }
    return neg ? -value : value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text)
{
    auto parts = detail::split(detail::trim(text), '/');
    if (parts.size() == 1)
        return {detail::parse_int(parts[0])};
    if (parts.size() == 2)
        return {detail::parse_int(parts[0]), detail::parse_int(parts[1])};
    throw parse_error("malformed rational '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Window and IntSet

struct Window {
    i64 lo = 1;
    i64 hi = 1;

    Window() = default;
    Window(i64 lo_, i64 hi_) : lo(lo_), hi(hi_)
    {
        if (lo < 1 || lo > hi)
            throw precondition_error("window must satisfy 1 <= lo <= hi, got [" + std::to_string(lo) +
                                     "," + std::to_string(hi) + "]");
    }

    i64 size() const { return hi - lo + 1; }
    bool contains(i64 n) const { return n >= lo && n <= hi; }
    bool contains(const Window& w) const { return w.lo >= lo && w.hi <= hi; }
    friend bool operator==(const Window&, const Window&) = default;
};

/// Finite set of positive integers confined to a window, stored as a bitmap.
class IntSet {
public:
    IntSet() : IntSet(Window{1, 1}) {}
    explicit IntSet(Window w) : window_(w), words_(static_cast<std::size_t>((w.size() + 63) / 64), 0) {}

    IntSet(Window w, std::span<const i64> members) : IntSet(w)
    {
        for (i64 m : members) {
            if (!w.contains(m))
                throw precondition_error("member " + std::to_string(m) + " outside window");
            set_bit(m);
        }
    }
    IntSet(Window w, std::initializer_list<i64> members)
        : IntSet(w, std::span<const i64>(members.begin(), members.size()))
    {
    }

    template <class Pred>
    static IntSet from_predicate(Window w, Pred&& pred)
    {
        IntSet s(w);
        for (i64 n = w.lo; n <= w.hi; ++n)
            if (pred(n))
                s.set_bit(n);
        return s;
    }

    static IntSet interval(Window w, i64 a, i64 b)
    {
        return from_predicate(w, [&](i64 n) { return n >= a && n <= b; });
    }

    static IntSet full(Window w) { return interval(w, w.lo, w.hi); }

    /// {k*n : n in s}, confined to [k*lo, k*hi].
    IntSet dilate(i64 k) const
    {
        if (k < 1)
            throw precondition_error("dilation factor must be positive");
        IntSet out(Window{checked_mul(window_.lo, k), checked_mul(window_.hi, k)});
        for_each([&](i64 n) { out.set_bit(n * k); });
        return out;
    }

    const Window& window() const { return window_; }

    bool contains(i64 n) const
    {
        if (!window_.contains(n))
            return false;
        auto off = static_cast<std::uint64_t>(n - window_.lo);
        return (words_[off >> 6] >> (off & 63)) & 1U;
    }

    std::size_t size() const
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                int bit = std::countr_zero(w);
                f(window_.lo + static_cast<i64>(wi * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<i64> members() const
    {
        std::vector<i64> out;
        for_each([&](i64 n) { out.push_back(n); });
        return out;
    }

    std::optional<i64> min() const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi] != 0)
                return window_.lo + static_cast<i64>(wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi])));
        return std::nullopt;
    }

    std::optional<i64> max() const
    {
        for (std::size_t wi = words_.size(); wi-- > 0;)
            if (words_[wi] != 0)
                return window_.lo + static_cast<i64>(wi * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
        return std::nullopt;
    }

    /// Members in [a, b] (clipped to the window).
    std::size_t count_in(i64 a, i64 b) const
    {
        a = std::max(a, window_.lo);
        b = std::min(b, window_.hi);
        std::size_t total = 0;
        for (i64 n = a; n <= b; ++n)
            total += contains(n) ? 1 : 0;
        return total;
    }

    IntSet set_union(const IntSet& other) const { return combine(other, [](bool a, bool b) { return a || b; }); }
    IntSet set_intersection(const IntSet& other) const { return combine(other, [](bool a, bool b) { return a && b; }); }
    IntSet set_difference(const IntSet& other) const { return combine(other, [](bool a, bool b) { return a && !b; }); }

    bool is_subset_of(const IntSet& other) const
    {
        bool ok = true;
        for_each([&](i64 n) { ok = ok && other.contains(n); });
        return ok;
    }

    friend bool operator==(const IntSet& a, const IntSet& b)
    {
        return a.window_ == b.window_ && a.words_ == b.words_;
    }

private:
    void set_bit(i64 n)
    {
        auto off = static_cast<std::uint64_t>(n - window_.lo);
        words_[off >> 6] |= std::uint64_t{1} << (off & 63);
    }

    template <class Op>
    IntSet combine(const IntSet& other, Op op) const
    {
        Window w{std::min(window_.lo, other.window_.lo), std::max(window_.hi, other.window_.hi)};
        return from_predicate(w, [&](i64 n) { return op(contains(n), other.contains(n)); });
    }

    Window window_;
    std::vector<std::uint64_t> words_;
};

// ---------------------------------------------------------------------------
// Coloring

using Color = int;

class Coloring {
public:
    Coloring() = default;
    Coloring(Window w, int r, std::vector<Color> colors) : window_(w), r_(r), colors_(std::move(colors))
    {
        if (r < 1)
            throw precondition_error("coloring needs at least one color");
        if (static_cast<i64>(colors_.size()) != w.size())
            throw precondition_error("coloring must assign exactly one color to every window element");
        for (Color c : colors_)
            if (c < 1 || c > r)
                throw precondition_error("color " + std::to_string(c) + " out of range 1.." + std::to_string(r));
    }

    template <class F>
    static Coloring from_function(Window w, int r, F&& f)
    {
        std::vector<Color> colors;
        colors.reserve(static_cast<std::size_t>(w.size()));
        for (i64 n = w.lo; n <= w.hi; ++n)
            colors.push_back(f(n));
        return {w, r, std::move(colors)};
    }

    const Window& window() const { return window_; }
    int num_colors() const { return r_; }

    Color color_of(i64 n) const
    {
        if (!window_.contains(n))
            throw precondition_error("value " + std::to_string(n) + " outside coloring window");
        return colors_[static_cast<std::size_t>(n - window_.lo)];
    }

    /// Color of n, or 0 when n lies outside the window.
    Color color_or_zero(i64 n) const
    {
        return window_.contains(n) ? colors_[static_cast<std::size_t>(n - window_.lo)] : 0;
    }

    const std::vector<Color>& colors() const { return colors_; }

    IntSet color_class(Color c) const
    {
        return IntSet::from_predicate(window_, [&](i64 n) { return color_of(n) == c; });
    }

    /// First occurrences of colors appear in increasing color order.
    bool is_canonical() const
    {
        Color next = 1;
        for (Color c : colors_) {
            if (c > next)
                return false;
            if (c == next)
                ++next;
        }
        return true;
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Window window_;
    int r_ = 1;
    std::vector<Color> colors_ = {1};
};

// ---------------------------------------------------------------------------
// LinearEquation

/// Homogeneous linear equation sum c_i x_i = 0 with nonzero coefficients.
/// Variables are 1-indexed in every public interface.
class LinearEquation {
public:
    LinearEquation() = default;
    explicit LinearEquation(std::vector<i64> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw precondition_error("equation needs at least one coefficient");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0)
                throw parse_error("zero coefficient at x" + std::to_string(i + 1));
            if (coeffs_[i] > max_coefficient || coeffs_[i] < -max_coefficient)
                throw parse_error("coefficient magnitude exceeds 2^31 at x" + std::to_string(i + 1));
        }
    }
    LinearEquation(std::initializer_list<i64> coeffs) : LinearEquation(std::vector<i64>(coeffs)) {}

    std::size_t k() const { return coeffs_.size(); }
    i64 coeff(std::size_t i) const { return coeffs_.at(i - 1); }
    const std::vector<i64>& coeffs() const { return coeffs_; }

    i64 coefficient_sum() const
    {
        i64 s = 0;
        for (i64 c : coeffs_)
            s = checked_add(s, c);
        return s;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(coeffs_[i]);
        }
        return out;
    }

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

private:
    std::vector<i64> coeffs_ = {1};
};

/// Accepts "2,-2,1" or "2x1 - 2x2 + 1x3 = 0" (also "x1 + x2 - x3 = 0").
inline LinearEquation parse_equation(std::string_view text)
{
    text = detail::trim(text);
    if (text.empty())
        throw parse_error("empty equation");

    if (text.find('x') == std::string_view::npos && text.find('X') == std::string_view::npos) {
        std::vector<i64> coeffs;
        for (auto part : detail::split(text, ','))
            coeffs.push_back(detail::parse_int(part));
        return LinearEquation(std::move(coeffs));
    }

    std::string_view lhs = text;
    if (auto eq = text.find('='); eq != std::string_view::npos) {
        auto rhs = detail::trim(text.substr(eq + 1));
        if (rhs != "0")
            throw parse_error("right-hand side must be 0");
        lhs = text.substr(0, eq);
    }

    std::vector<std::pair<std::size_t, i64>> terms;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[pos])))
            ++pos;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= lhs.size())
            break;
        i64 sign = 1;
        if (lhs[pos] == '+' || lhs[pos] == '-') {
            sign = lhs[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms");
        }
        first = false;
        std::size_t start = pos;
        while (pos < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[pos])))
            ++pos;
        i64 magnitude = 1;
        if (pos > start)
            magnitude = detail::parse_int(lhs.substr(start, pos - start));
        skip_ws();
        if (pos < lhs.size() && lhs[pos] == '*') {
            ++pos;
            skip_ws();
        }
        if (pos >= lhs.size() || (lhs[pos] != 'x' && lhs[pos] != 'X'))
            throw parse_error("expected variable x<i>");
        ++pos;
        start = pos;
        while (pos < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("variable without index");
        auto index = detail::parse_int(lhs.substr(start, pos - start));
        if (index < 1)
            throw parse_error("variable indices start at 1");
        terms.emplace_back(static_cast<std::size_t>(index), sign * magnitude);
    }
    if (terms.empty())
        throw parse_error("no terms");

    std::size_t k = 0;
    for (auto& [idx, c] : terms)
        k = std::max(k, idx);
    std::vector<i64> coeffs(k, 0);
    for (auto& [idx, c] : terms)
        coeffs[idx - 1] = checked_add(coeffs[idx - 1], c);
    return LinearEquation(std::move(coeffs));
}

/// Exact sum c_i n_i. Entries must be positive and the length must match.
inline i64 eval(const LinearEquation& eq, std::span<const i64> assignment)
{
    if (assignment.size() != eq.k())
        throw precondition_error("assignment length " + std::to_string(assignment.size()) +
                                 " does not match k=" + std::to_string(eq.k()));
    i64 total = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] < 1)
            throw precondition_error("assignment entries must be positive");
        total = checked_add(total, checked_mul(eq.coeffs()[i], assignment[i]));
    }
    return total;
}

inline i64 eval(const LinearEquation& eq, std::initializer_list<i64> assignment)
{
    return eval(eq, std::span<const i64>(assignment.begin(), assignment.size()));
}

inline bool pairwise_distinct(std::span<const i64> values)
{
    std::vector<i64> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace radokit
