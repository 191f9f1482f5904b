#pragma once

#include "radokit/solutions.hpp"

#include <variant>

namespace radokit {

/// Nonempty index set I (1-based, ascending) with sum_{i in I} c_i = 0.
struct RadoSubset {
    std::vector<std::size_t> indices;

    std::string to_string() const
    {
        std::string out = "{";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(indices[i]);
        }
        return out + "}";
    }
    friend bool operator==(const RadoSubset&, const RadoSubset&) = default;
};

/// A coloring with no monochromatic solution of eq.
struct AvoidingColoring {
    Coloring coloring;
    LinearEquation eq;
    bool distinct = false;
    bool canonical = false;

    friend bool operator==(const AvoidingColoring&, const AvoidingColoring&) = default;
};

using Certificate = std::variant<RadoSubset, AvoidingColoring, MonochromaticSolution>;

struct Verdict {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

/// Re-checks every invariant of a certificate from scratch. The coloring is
/// required for MonochromaticSolution certificates and ignored otherwise.
inline Verdict verify_certificate(const LinearEquation& eq, const Certificate& cert,
                                  const Coloring* coloring = nullptr)
{
    auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };

    if (const auto* subset = std::get_if<RadoSubset>(&cert)) {
        if (subset->indices.empty())
            return fail("empty index set");
        i64 sum = 0;
        std::size_t prev = 0;
        for (std::size_t idx : subset->indices) {
            if (idx < 1 || idx > eq.k())
                return fail("index " + std::to_string(idx) + " out of range 1.." + std::to_string(eq.k()));
            if (idx <= prev)
                return fail("indices not strictly increasing");
            prev = idx;
            sum = checked_add(sum, eq.coeff(idx));
        }
        if (sum != 0)
            return fail("coefficients over I sum to " + std::to_string(sum));
        return {};
    }

    if (const auto* sol = std::get_if<MonochromaticSolution>(&cert)) {
        if (!coloring)
            return fail("monochromatic solution needs a coloring to verify against");
        auto why = check_mono_solution(eq, *sol, coloring);
        if (!why.empty())
            return fail(why);
        return {};
    }

    const auto& avoid = std::get<AvoidingColoring>(cert);
    if (!(avoid.eq == eq))
        return fail("avoiding coloring certifies a different equation");
    if (avoid.canonical && !avoid.coloring.is_canonical())
        return fail("coloring claimed canonical but first color occurrences are out of order");
    if (auto hit = first_mono_solution(eq, avoid.coloring, avoid.distinct)) {
        std::string tuple;
        for (i64 v : hit->assignment)
            tuple += (tuple.empty() ? "" : ",") + std::to_string(v);
        return fail("monochromatic solution (" + tuple + ") in color " + std::to_string(hit->color));
    }
    return {};
}

}  // namespace radokit
