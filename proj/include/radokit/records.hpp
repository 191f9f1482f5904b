#pragma once

// Line-oriented "key=value key=value ..." records. Values containing spaces,
// quotes or '=' are written in double quotes with backslash escapes.

#include "radokit/core.hpp"

#include <sstream>

namespace radokit {

class Record {
public:
    Record() = default;
    template <class V>
    Record(std::string first_key, V&& first_value)
    {
        add(std::move(first_key), std::forward<V>(first_value));
    }

    Record& add(std::string key, std::string value)
    {
        fields_.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    Record& add(std::string key, i64 value) { return add(std::move(key), std::to_string(value)); }
    Record& add(std::string key, int value) { return add(std::move(key), std::to_string(value)); }
    Record& add(std::string key, std::size_t value) { return add(std::move(key), std::to_string(value)); }
    Record& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "1" : "0")); }
    Record& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }

    std::optional<std::string> get(std::string_view key) const
    {
        for (const auto& [k, v] : fields_)
            if (k == key)
                return v;
        return std::nullopt;
    }

    std::string at(std::string_view key) const
    {
        auto v = get(key);
        if (!v)
            throw parse_error("record has no key '" + std::string(key) + "'");
        return *v;
    }

    std::string to_line() const
    {
        std::string out;
        for (const auto& [k, v] : fields_) {
            if (!out.empty())
                out += ' ';
            out += k;
            out += '=';
            out += quote(v);
        }
        return out;
    }

    static Record parse(std::string_view line)
    {
        Record rec;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() && line[pos] == ' ')
                ++pos;
        };
        while (true) {
            skip_ws();
            if (pos >= line.size())
                break;
            auto eq = line.find('=', pos);
            if (eq == std::string_view::npos)
                throw parse_error("record field without '=' in: " + std::string(line));
            std::string key(line.substr(pos, eq - pos));
            if (key.empty() || key.find(' ') != std::string::npos)
                throw parse_error("malformed record key in: " + std::string(line));
            pos = eq + 1;
            std::string value;
            if (pos < line.size() && line[pos] == '"') {
                ++pos;
                bool closed = false;
                while (pos < line.size()) {
                    char ch = line[pos++];
                    if (ch == '\\' && pos < line.size()) {
                        value += line[pos++];
                    } else if (ch == '"') {
                        closed = true;
                        break;
                    } else {
                        value += ch;
                    }
                }
                if (!closed)
                    throw parse_error("unterminated quoted value in: " + std::string(line));
            } else {
                while (pos < line.size() && line[pos] != ' ')
                    value += line[pos++];
            }
            rec.add(std::move(key), std::move(value));
        }
        return rec;
    }

    friend bool operator==(const Record&, const Record&) = default;

private:
    static std::string quote(const std::string& v)
    {
        bool plain = !v.empty() && v.find_first_of(" \"=\\") == std::string::npos;
        if (plain)
            return v;
        std::string out = "\"";
        for (char ch : v) {
            if (ch == '"' || ch == '\\')
                out += '\\';
            out += ch;
        }
        return out + '"';
    }

    std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string join_ints(std::span<const i64> values, char sep = ',')
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

inline std::vector<i64> split_ints(std::string_view text, char sep = ',')
{
    std::vector<i64> out;
    if (detail::trim(text).empty())
        return out;
    for (auto part : detail::split(text, sep))
        out.push_back(detail::parse_int(part));
    return out;
}

}  // namespace radokit
