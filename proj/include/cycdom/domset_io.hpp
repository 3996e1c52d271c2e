#pragma once

// domset v1: a line-oriented text format for vertex sets of C_m x C_n.
//
//   # domset v1
//   m 5
//   n 3
//   col 0: 0 2
//   col 1: 1 3
//   col 2: 2 4
//
// One "col" line per column, in order, members ascending. An empty column
// is written "col <j>:".

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "cycdom/core.hpp"

namespace cycdom {

class parse_error : public input_error {
public:
    parse_error(int line, const std::string& what)
        : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

inline std::string write_set(const CandidateSet& w) {
    std::string out = "# domset v1\n";
    out += "m " + std::to_string(w.instance().m()) + "\n";
    out += "n " + std::to_string(w.instance().n()) + "\n";
    for (int j = 0; j < w.instance().n(); ++j) {
        out += "col " + std::to_string(j) + ":";
        for (int k : w.column(j).members()) out += " " + std::to_string(k);
        out += "\n";
    }
    return out;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto eol = text.find('\n');
        if (eol == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, eol));
        text.remove_prefix(eol + 1);
    }
    return lines;
}

inline std::vector<std::string_view> split_words(std::string_view s) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && s[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < s.size() && s[end] != ' ') ++end;
        if (end > pos) words.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return words;
}

inline int parse_int(std::string_view word, int line, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw parse_error(line, std::string("expected integer ") + what + ", got '" +
                                    std::string(word) + "'");
    return value;
}

inline int parse_header_value(std::string_view line_text, int line, std::string_view key) {
    auto words = split_words(line_text);
    if (words.size() != 2 || words[0] != key)
        throw parse_error(line, "expected '" + std::string(key) + " <integer>'");
    return parse_int(words[1], line, key.data());
}

}  // namespace detail

inline CandidateSet read_set(std::string_view text) {
    auto lines = detail::split_lines(text);
    // Trailing blank lines are tolerated; anything else must be exact.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty() || lines[0] != "# domset v1")
        throw parse_error(1, "missing '# domset v1' header");
    if (lines.size() < 3) throw parse_error(static_cast<int>(lines.size()) + 1, "missing m/n lines");

    const int m = detail::parse_header_value(lines[1], 2, "m");
    const int n = detail::parse_header_value(lines[2], 3, "n");
    if (m < 2 || m > ColumnMask::max_universe)
        throw parse_error(2, "m must be in [2, " + std::to_string(ColumnMask::max_universe) + "]");
    if (n < 2 || n > CycleProduct::max_dimension)
        throw parse_error(3, "n must be in [2, " + std::to_string(CycleProduct::max_dimension) + "]");
    if (lines.size() != static_cast<std::size_t>(n) + 3)
        throw parse_error(static_cast<int>(lines.size()),
                          "expected " + std::to_string(n) + " column lines, found " +
                              std::to_string(lines.size() - 3));

    CandidateSet w(CycleProduct(m, n));
    for (int j = 0; j < n; ++j) {
        const int line = j + 4;
        std::string_view body = lines[static_cast<std::size_t>(j) + 3];
        const std::string prefix = "col " + std::to_string(j) + ":";
        if (body.substr(0, prefix.size()) != prefix)
            throw parse_error(line, "expected '" + prefix + "'");
        body.remove_prefix(prefix.size());
        if (!body.empty() && body.front() != ' ')
            throw parse_error(line, "expected space after ':'");
        for (auto word : detail::split_words(body)) {
            int k = detail::parse_int(word, line, "member");
            if (k < 0 || k >= m)
                throw parse_error(line, "member " + std::to_string(k) + " out of range [0, " +
                                            std::to_string(m) + ")");
            if (w.column(j).contains(k))
                throw parse_error(line, "duplicate member " + std::to_string(k));
            w.column(j).insert(k);
        }
    }
    return w;
}

}  // namespace cycdom
