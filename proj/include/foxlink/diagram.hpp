#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "foxlink/errors.hpp"
#include "foxlink/intmatrix.hpp"

namespace foxlink {

/// One crossing: the arc passing over and the two under-arc endpoints.
/// Orientation is irrelevant to the coloring condition, so none is stored.
struct Crossing {
    int over = 0;
    int under_a = 0;
    int under_b = 0;
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Combinatorial link diagram: pure incidence data, no planar embedding.
/// Crossing-free closed components are kept as a count; each contributes one
/// unconstrained color.
struct Diagram {
    std::string name = "unnamed";
    int arcs = 0;
    std::vector<Crossing> crossings;
    int free_loops = 0;
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Checks arc-index ranges and under-endpoint multiplicity. A closed diagram
/// references every arc exactly twice in under positions; open-strand gadgets
/// with one under endpoint on an arc are accepted as well. Zero or more than
/// two endpoints is always an error. Planarity is deliberately not checked:
/// everything downstream depends only on the incidence data.
inline void validate(const Diagram& d) {
    if (d.arcs < 0 || d.free_loops < 0)
        throw validation_error("negative arc or loop count");
    std::vector<int> under_count(static_cast<std::size_t>(d.arcs), 0);
    auto check_index = [&](int idx) {
        if (idx < 0 || idx >= d.arcs)
            throw validation_error("arc index out of range: " + std::to_string(idx));
    };
    for (const Crossing& c : d.crossings) {
        check_index(c.over);
        check_index(c.under_a);
        check_index(c.under_b);
        ++under_count[static_cast<std::size_t>(c.under_a)];
        ++under_count[static_cast<std::size_t>(c.under_b)];
    }
    for (int i = 0; i < d.arcs; ++i) {
        const int n = under_count[static_cast<std::size_t>(i)];
        if (n == 0 || n > 2)
            throw validation_error("under-endpoint count violation: arc " + std::to_string(i) +
                                   " appears " + std::to_string(n) + " times in under positions");
    }
}

namespace detail {

struct Token {
    std::string text;
    int column = 0;
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

inline int parse_arc_index(const Token& tok, int line_no) {
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("expected an arc index, got '" + tok.text + "'", line_no, tok.column);
    if (value < 0)
        throw parse_error("arc index out of range: " + tok.text, line_no, tok.column);
    return value;
}

}  // namespace detail

/// Line-oriented text format: '#' starts a comment, 'link <name>' names the
/// diagram, 'X <over> <under> <under>' declares a crossing (0-based arc
/// indices), 'loop' declares one crossing-free component. The arc count is
/// one plus the largest index referenced.
inline Diagram parse_diagram(const std::string& text) {
    Diagram d;
    bool named = false;
    int max_index = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tokens = detail::split_tokens(line);
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }
        const auto& head = tokens.front();
        if (head.text == "link") {
            if (named) throw parse_error("multiple 'link' declarations", line_no, head.column);
            std::string_view rest = line.substr(head.column - 1 + head.text.size());
            while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
                rest.remove_prefix(1);
            while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
                rest.remove_suffix(1);
            if (rest.empty()) throw parse_error("missing link name", line_no, head.column);
            d.name = std::string(rest);
            named = true;
        } else if (head.text == "X") {
            if (tokens.size() != 4)
                throw parse_error("crossing needs exactly three arc indices", line_no, head.column);
            Crossing c;
            c.over = detail::parse_arc_index(tokens[1], line_no);
            c.under_a = detail::parse_arc_index(tokens[2], line_no);
            c.under_b = detail::parse_arc_index(tokens[3], line_no);
            max_index = std::max({max_index, c.over, c.under_a, c.under_b});
            d.crossings.push_back(c);
        } else if (head.text == "loop") {
            if (tokens.size() != 1)
                throw parse_error("'loop' takes no arguments", line_no, tokens[1].column);
            ++d.free_loops;
        } else {
            throw parse_error("unknown directive '" + head.text + "'", line_no, head.column);
        }
        if (eol == text.size()) break;
    }
    d.arcs = max_index + 1;
    validate(d);
    return d;
}

inline std::string serialize_diagram(const Diagram& d) {
    std::string out = "link " + (d.name.empty() ? std::string("unnamed") : d.name) + "\n";
    for (const Crossing& c : d.crossings)
        out += "X " + std::to_string(c.over) + " " + std::to_string(c.under_a) + " " +
               std::to_string(c.under_b) + "\n";
    for (int i = 0; i < d.free_loops; ++i) out += "loop\n";
    return out;
}

namespace detail {

class PdLexer {
public:
    explicit PdLexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", line_, col_);
        advance();
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            advance();
        }
        if (out.empty()) throw parse_error("expected an identifier", line_, col_);
        return out;
    }

    long number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        if (pos_ == start) throw parse_error("expected an edge label", line_, col_);
        return std::stol(text_.substr(start, pos_ - start));
    }

    int line() const { return line_; }
    int col() const { return col_; }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace detail

/// Imports a planar-diagram code PD[X[a,b,c,d], ...] with 1-based edge
/// labels, each tuple listed counterclockwise from the incoming under-edge
/// with the over-strand in positions 2 and 4. The two over-strand edges of
/// every crossing are merged into a single arc; arcs are re-indexed from 0 in
/// order of their smallest edge label. Loop[e] declares a crossing-free
/// component.
inline Diagram import_pd_code(const std::string& text) {
    detail::PdLexer lex(text);
    if (lex.ident() != "PD") throw parse_error("expected 'PD'", lex.line(), lex.col());
    lex.expect('[');

    struct PdCrossing {
        long a, b, c, d;
    };
    std::vector<PdCrossing> tuples;
    std::vector<long> loop_labels;
    if (!lex.accept(']')) {
        for (;;) {
            const std::string kind = lex.ident();
            lex.expect('[');
            if (kind == "X") {
                PdCrossing t{};
                t.a = lex.number();
                lex.expect(',');
                t.b = lex.number();
                lex.expect(',');
                t.c = lex.number();
                lex.expect(',');
                t.d = lex.number();
                lex.expect(']');
                tuples.push_back(t);
            } else if (kind == "Loop") {
                loop_labels.push_back(lex.number());
                lex.expect(']');
            } else {
                throw parse_error("unknown PD element '" + kind + "'", lex.line(), lex.col());
            }
            if (lex.accept(']')) break;
            lex.expect(',');
        }
    }
    if (!lex.eof()) throw parse_error("trailing input after PD code", lex.line(), lex.col());

    std::map<long, int> usage;
    for (const auto& t : tuples)
        for (long e : {t.a, t.b, t.c, t.d}) {
            if (e < 1) throw validation_error("inconsistent edge labels: " + std::to_string(e));
            ++usage[e];
        }
    for (auto [edge, count] : usage)
        if (count != 2)
            throw validation_error("edge " + std::to_string(edge) + " used " +
                                   std::to_string(count) + " times (expected 2)");
    for (long e : loop_labels)
        if (usage.count(e) || std::count(loop_labels.begin(), loop_labels.end(), e) != 1)
            throw validation_error("inconsistent edge labels: loop edge " + std::to_string(e) +
                                   " reused");

    // Union-find over edge labels; over-strand edges merge into one arc.
    std::map<long, long> parent;
    for (auto [edge, count] : usage) parent[edge] = edge;
    auto find = [&](long e) {
        while (parent[e] != e) {
            parent[e] = parent[parent[e]];
            e = parent[e];
        }
        return e;
    };
    for (const auto& t : tuples) {
        long rb = find(t.b), rd = find(t.d);
        if (rb != rd) parent[std::max(rb, rd)] = std::min(rb, rd);
    }

    std::map<long, int> arc_index;  // class root (smallest label) -> arc
    for (auto [edge, count] : usage) {
        long root = find(edge);
        if (!arc_index.count(root)) arc_index[root] = 0;
    }
    int next = 0;
    for (auto& [root, idx] : arc_index) idx = next++;

    Diagram d;
    d.arcs = next;
    d.free_loops = static_cast<int>(loop_labels.size());
    for (const auto& t : tuples)
        d.crossings.push_back(
            {arc_index[find(t.b)], arc_index[find(t.a)], arc_index[find(t.c)]});
    validate(d);
    return d;
}

/// Coloring matrix: one row per crossing reading "twice the over-arc minus
/// the two under-arcs", one column per arc followed by one all-zero column
/// per free loop. Every row sums to zero.
inline IntMatrix coloring_matrix(const Diagram& d) {
    validate(d);
    IntMatrix m(d.crossings.size(),
                static_cast<std::size_t>(d.arcs) + static_cast<std::size_t>(d.free_loops));
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        m(i, static_cast<std::size_t>(c.over)) += 2;
        m(i, static_cast<std::size_t>(c.under_a)) -= 1;
        m(i, static_cast<std::size_t>(c.under_b)) -= 1;
    }
    return m;
}

/// Standard n-crossing diagram of the torus knot T(2, n) for odd n >= 3:
/// crossing i is (over, unders) = (i+1, {i, i+2}) with indices mod n.
inline Diagram torus_2n(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("torus_2n requires an odd crossing count >= 3");
    Diagram d;
    d.name = "T(2," + std::to_string(n) + ")";
    d.arcs = n;
    for (int i = 0; i < n; ++i) d.crossings.push_back({(i + 1) % n, i, (i + 2) % n});
    return d;
}

}  // namespace foxlink
