#pragma once

// Record encodings of result types. Every to_record has a matching parser so
// that machine-readable CLI output reads back into the library's types.

#include "radokit/largeness.hpp"
#include "radokit/records.hpp"
#include "radokit/search.hpp"

namespace radokit {

inline Record to_record(const RadoSubset& s) { return Record("subset", s.to_string()); }

inline RadoSubset subset_from_record(const Record& rec)
{
    auto text = detail::trim(rec.at("subset"));
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw parse_error("subset must look like {i,j,...}");
    RadoSubset out;
    for (i64 v : split_ints(text.substr(1, text.size() - 2))) {
        if (v < 1)
            throw parse_error("subset indices are 1-based");
        out.indices.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

inline Record to_record(const MonochromaticSolution& s)
{
    Record r("assignment", join_ints(s.assignment));
    r.add("color", static_cast<int>(s.color)).add("distinct", s.distinct);
    return r;
}

inline MonochromaticSolution solution_from_record(const Record& rec)
{
    MonochromaticSolution s;
    s.assignment = split_ints(rec.at("assignment"));
    auto c = detail::parse_int(rec.at("color"));
    if (c < 1 || c > std::numeric_limits<Color>::max())
        throw parse_error("color out of range");
    s.color = static_cast<Color>(c);
    s.distinct = rec.get("distinct").value_or("0") == "1";
    return s;
}

inline Record to_record(const RadoNumberResult& r)
{
    Record rec("status", to_string(r.status));
    if (r.n_star)
        rec.add("n_star", *r.n_star);
    rec.add("nodes", std::to_string(r.nodes));
    return rec;
}

inline RadoNumberResult rado_number_from_record(const Record& rec)
{
    RadoNumberResult r;
    auto st = rec.at("status");
    if (st == "found")
        r.status = SearchStatus::found;
    else if (st == "absent")
        r.status = SearchStatus::absent;
    else if (st == "budget-exceeded")
        r.status = SearchStatus::budget_exceeded;
    else
        throw parse_error("unknown search status '" + st + "'");
    if (auto n = rec.get("n_star"))
        r.n_star = detail::parse_int(*n);
    r.nodes = static_cast<std::uint64_t>(detail::parse_int(rec.at("nodes")));
    return r;
}

inline Record to_record(const GapStat& g)
{
    Record rec("max_gap", g.max_gap);
    rec.add("mult_gap", g.mult_gap ? std::to_string(*g.mult_gap) : std::string("none"));
    return rec;
}

inline GapStat gap_stat_from_record(const Record& rec)
{
    GapStat g;
    g.max_gap = detail::parse_int(rec.at("max_gap"));
    auto m = rec.at("mult_gap");
    if (m != "none")
        g.mult_gap = detail::parse_int(m);
    return g;
}

inline Record to_record(const DensityStat& d)
{
    Record rec("n", d.n);
    rec.add("start", d.best_start).add("count", d.count).add("ratio", d.ratio.to_string());
    return rec;
}

inline DensityStat density_from_record(const Record& rec)
{
    DensityStat d;
    d.n = detail::parse_int(rec.at("n"));
    d.best_start = detail::parse_int(rec.at("start"));
    d.count = detail::parse_int(rec.at("count"));
    d.ratio = Rational::parse(rec.at("ratio"));
    return d;
}

/// FNV-1a, used to fingerprint input files in reports.
inline std::string digest(std::string_view bytes)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4)
        out[static_cast<std::size_t>(i)] = hex[h & 15];
    return out;
}

}  // namespace radokit
