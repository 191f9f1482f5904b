#pragma once

// Text formats for colorings and integer sets.
//
//   coloring:  "window <lo> <hi> colors <r>" then one "n<TAB>color" line per integer
//   set:       "window <lo> <hi>" then one member per line, strictly increasing

#include "radokit/core.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace radokit {

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!trim(line).empty())
            return true;
    }
    return false;
}

inline std::vector<std::string> words(std::string_view line)
{
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string w;
    while (ss >> w)
        out.push_back(w);
    return out;
}

inline std::string at_line(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

}  // namespace detail

inline void write_coloring(std::ostream& out, const Coloring& coloring)
{
    const auto& w = coloring.window();
    out << "window " << w.lo << ' ' << w.hi << " colors " << coloring.num_colors() << '\n';
    for (i64 n = w.lo; n <= w.hi; ++n)
        out << n << '\t' << coloring.color_of(n) << '\n';
}

inline Coloring read_coloring(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(in, line, lineno))
        throw parse_error("coloring file is empty");
    auto header = detail::words(line);
    if (header.size() != 5 || header[0] != "window" || header[3] != "colors")
        throw parse_error(detail::at_line(lineno) + "expected 'window <lo> <hi> colors <r>'");
    Window w{detail::parse_int(header[1]), detail::parse_int(header[2])};
    auto r = detail::parse_int(header[4]);
    if (r < 1)
        throw parse_error(detail::at_line(lineno) + "number of colors must be positive");

    std::vector<Color> colors(static_cast<std::size_t>(w.size()), 0);
    while (detail::next_content_line(in, line, lineno)) {
        auto fields = detail::words(line);
        if (fields.size() != 2)
            throw parse_error(detail::at_line(lineno) + "expected '<n>\\t<color>'");
        i64 n = detail::parse_int(fields[0]);
        i64 c = detail::parse_int(fields[1]);
        if (!w.contains(n))
            throw parse_error(detail::at_line(lineno) + std::to_string(n) + " outside window");
        if (c < 1 || c > r)
            throw parse_error(detail::at_line(lineno) + "color " + std::to_string(c) + " out of range");
        auto& slot = colors[static_cast<std::size_t>(n - w.lo)];
        if (slot != 0)
            throw parse_error(detail::at_line(lineno) + std::to_string(n) + " colored twice");
        slot = static_cast<Color>(c);
    }
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == 0)
            throw parse_error("coloring does not cover " + std::to_string(w.lo + static_cast<i64>(i)));
    return {w, static_cast<int>(r), std::move(colors)};
}

inline void write_intset(std::ostream& out, const IntSet& set)
{
    out << "window " << set.window().lo << ' ' << set.window().hi << '\n';
    set.for_each([&](i64 n) { out << n << '\n'; });
}

inline IntSet read_intset(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(in, line, lineno))
        throw parse_error("set file is empty");
    auto header = detail::words(line);
    if (header.size() != 3 || header[0] != "window")
        throw parse_error(detail::at_line(lineno) + "expected 'window <lo> <hi>'");
    Window w{detail::parse_int(header[1]), detail::parse_int(header[2])};
    std::vector<i64> members;
    while (detail::next_content_line(in, line, lineno)) {
        i64 n = detail::parse_int(line);
        if (!members.empty() && n <= members.back())
            throw parse_error(detail::at_line(lineno) + "members must be strictly increasing");
        if (!w.contains(n))
            throw parse_error(detail::at_line(lineno) + std::to_string(n) + " outside window");
        members.push_back(n);
    }
    return {w, members};
}

template <class Reader>
auto read_file(const std::string& path, Reader&& reader)
{
    std::ifstream in(path);
    if (!in)
        throw error("cannot open '" + path + "'");
    return reader(in);
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer)
{
    std::ofstream out(path);
    if (!out)
        throw error("cannot write '" + path + "'");
    writer(out);
}

}  // namespace radokit
