#pragma once

#include "pachner/ainfinity.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pachner {

/// Parse diagnostic carrying a 1-based line/column position.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& message, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

/// One explicit m-table line: `m2: l* i* -> n*` (sign -1 with a `sign -`
/// prefix).  Stars on names are optional and stripped.
struct MTableEntry {
    int arity = 2;
    std::vector<std::string> inputs;
    std::string output;
    int sign = 1;

    friend bool operator==(const MTableEntry&, const MTableEntry&) = default;
};

/// A parsed .cplx document: labeled surfaces plus the optional polygon cells
/// and explicit table entries feeding the A-infinity checks.
struct ComplexDocument {
    std::string name;
    std::vector<LabeledSurface> surfaces;
    std::vector<SquareCell> squares;
    std::vector<PentagonCell> pentagons;
    std::vector<MTableEntry> mtable;

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

namespace detail {

struct Token {
    std::string text;
    int column = 0;  // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

inline int parse_int(const Token& tok, int line) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    }
    if (pos != tok.text.size())
        throw ParseError("expected an integer, got '" + tok.text + "'", line, tok.column);
    return value;
}

inline std::string strip_star(std::string name) {
    if (!name.empty() && name.back() == '*')
        name.pop_back();
    return name;
}

}  // namespace detail

/// Parses the line-oriented .cplx format.  Keywords: surface, vertex, glue,
/// triangle, square, pentagon, mtable; `#` starts a comment.
inline ComplexDocument parse_document(const std::string& text) {
    ComplexDocument doc;
    LabeledSurface* current = nullptr;
    bool in_mtable = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_any = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto tokens = detail::tokenize_line(raw);
        if (tokens.empty())
            continue;
        saw_any = true;
        const auto& head = tokens[0];

        auto need = [&](size_t count, const std::string& what) {
            if (tokens.size() != count)
                throw ParseError("'" + head.text + "' expects " + what, line_no, head.column);
        };

        if (head.text == "surface") {
            need(2, "a name");
            doc.surfaces.emplace_back();
            current = &doc.surfaces.back();
            current->name = tokens[1].text;
            if (doc.name.empty())
                doc.name = current->name;
            in_mtable = false;
            continue;
        }

        if (in_mtable) {
            // Table lines: [sign -] mN: x* y* ... -> z*
            size_t idx = 0;
            int sign = 1;
            if (tokens[idx].text == "sign") {
                if (tokens.size() < 2 || (tokens[1].text != "-" && tokens[1].text != "+"))
                    throw ParseError("'sign' expects + or -", line_no, tokens[idx].column);
                sign = tokens[1].text == "-" ? -1 : 1;
                idx = 2;
            }
            if (idx >= tokens.size())
                throw ParseError("expected an mN table line", line_no, head.column);
            std::string op = tokens[idx].text;
            if (!op.empty() && op.back() == ':')
                op.pop_back();
            if (op.size() < 2 || op[0] != 'm' ||
                !std::all_of(op.begin() + 1, op.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("expected mN (like m2:), got '" + tokens[idx].text + "'",
                                 line_no, tokens[idx].column);
            MTableEntry entry;
            entry.arity = std::stoi(op.substr(1));
            entry.sign = sign;
            if (entry.arity < 1 || entry.arity > 4)
                throw ParseError("table arity must be 1..4", line_no, tokens[idx].column);
            ++idx;
            bool seen_arrow = false;
            for (; idx < tokens.size(); ++idx) {
                if (tokens[idx].text == "->") {
                    if (seen_arrow)
                        throw ParseError("duplicate '->'", line_no, tokens[idx].column);
                    seen_arrow = true;
                    continue;
                }
                if (!seen_arrow)
                    entry.inputs.push_back(detail::strip_star(tokens[idx].text));
                else if (entry.output.empty())
                    entry.output = detail::strip_star(tokens[idx].text);
                else
                    throw ParseError("table entries have one output", line_no,
                                     tokens[idx].column);
            }
            if (!seen_arrow || entry.output.empty())
                throw ParseError("table line needs '-> output'", line_no, head.column);
            if (static_cast<int>(entry.inputs.size()) != entry.arity)
                throw ParseError("m" + std::to_string(entry.arity) + " takes " +
                                     std::to_string(entry.arity) + " inputs, got " +
                                     std::to_string(entry.inputs.size()),
                                 line_no, head.column);
            doc.mtable.push_back(std::move(entry));
            continue;
        }

        if (head.text == "vertex") {
            if (!current)
                throw ParseError("'vertex' outside a surface block", line_no, head.column);
            if (tokens.size() < 2)
                throw ParseError("'vertex' expects at least one id", line_no, head.column);
            for (size_t i = 1; i < tokens.size(); ++i)
                current->declared_vertices.push_back(detail::parse_int(tokens[i], line_no));
        } else if (head.text == "glue") {
            if (!current)
                throw ParseError("'glue' outside a surface block", line_no, head.column);
            need(3, "two vertex ids");
            current->vertex_glues.emplace_back(detail::parse_int(tokens[1], line_no),
                                               detail::parse_int(tokens[2], line_no));
        } else if (head.text == "triangle") {
            if (!current)
                throw ParseError("'triangle' outside a surface block", line_no, head.column);
            // triangle v0 v1 v2 labels a b c [orient +|-]
            if (tokens.size() != 8 && tokens.size() != 10)
                throw ParseError("'triangle' expects: v0 v1 v2 labels a b c [orient +|-]",
                                 line_no, head.column);
            if (tokens[4].text != "labels")
                throw ParseError("expected keyword 'labels'", line_no, tokens[4].column);
            LabeledTriangle t;
            t.vertices = std::array<VertexId, 3>{detail::parse_int(tokens[1], line_no),
                                                 detail::parse_int(tokens[2], line_no),
                                                 detail::parse_int(tokens[3], line_no)};
            for (int i = 0; i < 3; ++i)
                t.labels[i] = EdgeLabel{detail::strip_star(tokens[5 + i].text)};
            t.orient = Orientation::Plus;
            if (tokens.size() == 10) {
                if (tokens[8].text != "orient")
                    throw ParseError("expected keyword 'orient'", line_no, tokens[8].column);
                if (tokens[9].text == "+")
                    t.orient = Orientation::Plus;
                else if (tokens[9].text == "-")
                    t.orient = Orientation::Op;
                else
                    throw ParseError("orient must be + or -", line_no, tokens[9].column);
            }
            current->triangles.push_back(std::move(t));
        } else if (head.text == "square") {
            need(5, "four corner vertices");
            SquareCell sq;
            for (int i = 0; i < 4; ++i)
                sq.corners[i] = detail::parse_int(tokens[1 + i], line_no);
            doc.squares.push_back(sq);
        } else if (head.text == "pentagon") {
            // pentagon c0 c1 c2 c3 c4 diagonals t s p r q
            need(12, "five corners, 'diagonals', five names");
            PentagonCell pc;
            for (int i = 0; i < 5; ++i)
                pc.corners[i] = detail::parse_int(tokens[1 + i], line_no);
            if (tokens[6].text != "diagonals")
                throw ParseError("expected keyword 'diagonals'", line_no, tokens[6].column);
            for (int i = 0; i < 5; ++i)
                pc.diagonals[i] = detail::strip_star(tokens[7 + i].text);
            doc.pentagons.push_back(pc);
        } else if (head.text == "mtable") {
            need(1, "no arguments");
            in_mtable = true;
        } else {
            throw ParseError("unknown directive '" + head.text + "'", line_no, head.column);
        }
    }

    if (!saw_any)
        throw ParseError("empty document: no directives found", std::max(line_no, 1), 1);
    return doc;
}

/// Serializes a document in the same line format; parse(serialize(d)) == d.
inline std::string serialize_document(const ComplexDocument& doc) {
    std::ostringstream out;
    for (const auto& s : doc.surfaces) {
        out << "surface " << s.name << "\n";
        if (!s.declared_vertices.empty()) {
            out << "vertex";
            for (VertexId v : s.declared_vertices)
                out << ' ' << v;
            out << "\n";
        }
        for (const auto& [a, b] : s.vertex_glues)
            out << "glue " << a << ' ' << b << "\n";
        for (const auto& t : s.triangles) {
            if (!t.vertices)
                throw std::invalid_argument("serialize: triangle lacks vertices");
            out << "triangle " << (*t.vertices)[0] << ' ' << (*t.vertices)[1] << ' '
                << (*t.vertices)[2] << " labels " << t.labels[0].name << ' '
                << t.labels[1].name << ' ' << t.labels[2].name << " orient "
                << (t.orient == Orientation::Plus ? '+' : '-') << "\n";
        }
    }
    for (const auto& sq : doc.squares) {
        out << "square";
        for (VertexId v : sq.corners)
            out << ' ' << v;
        out << "\n";
    }
    for (const auto& pc : doc.pentagons) {
        out << "pentagon";
        for (VertexId v : pc.corners)
            out << ' ' << v;
        out << " diagonals";
        for (const auto& d : pc.diagonals)
            out << ' ' << d;
        out << "\n";
    }
    if (!doc.mtable.empty()) {
        out << "mtable\n";
        for (const auto& e : doc.mtable) {
            if (e.sign < 0)
                out << "sign - ";
            out << 'm' << e.arity << ':';
            for (const auto& x : e.inputs)
                out << ' ' << x << '*';
            out << " -> " << e.output << "*\n";
        }
    }
    return out.str();
}

/// Folds the document's explicit mtable lines into built A-infinity data
/// with the same set-or-verify semantics as derived entries.
inline void apply_mtable(AInfinityData& data, const std::vector<MTableEntry>& entries) {
    for (const auto& e : entries) {
        auto& table = data.maps[e.arity];
        table.arity = e.arity;
        if (e.arity == 1)
            table.sign_degree = 1;
        std::vector<Symbol> tuple;
        for (const auto& x : e.inputs) {
            tuple.emplace_back(x);
            data.basis.ensure(tuple.back(), data.basis.contains(tuple.back())
                                                ? data.basis.degree_of(tuple.back())
                                                : 1);
        }
        Symbol out(e.output);
        data.basis.ensure(out, data.basis.contains(out) ? data.basis.degree_of(out) : 1);
        table.set_entry(tuple, out, e.sign);
    }
}

}  // namespace pachner
