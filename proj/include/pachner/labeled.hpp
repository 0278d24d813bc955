#pragma once

#include "pachner/chain.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

enum class Orientation { Plus, Op };

inline Orientation reversed(Orientation o) {
    return o == Orientation::Plus ? Orientation::Op : Orientation::Plus;
}

/// Edge label: a name attached to a triangle side.  Labels are unsigned;
/// formal negation exists only at the chain level.
struct EdgeLabel {
    std::string name;

    EdgeLabel() = default;
    explicit EdgeLabel(std::string n) : name(std::move(n)) {}

    auto operator<=>(const EdgeLabel&) const = default;
};

/// Labeled triangle T(a, b, c): boundary position d_i carries labels[i].
/// With a vertex triple (x, y, z) the positions are the faces
/// d0 = [y,z], d1 = [x,z], d2 = [x,y].
struct LabeledTriangle {
    std::optional<std::array<VertexId, 3>> vertices;
    std::array<EdgeLabel, 3> labels;
    Orientation orient = Orientation::Plus;

    LabeledTriangle() = default;
    LabeledTriangle(std::array<VertexId, 3> vs, std::array<EdgeLabel, 3> ls,
                    Orientation o = Orientation::Plus)
        : vertices(vs), labels(ls), orient(o) {}
    LabeledTriangle(std::array<EdgeLabel, 3> ls, Orientation o = Orientation::Plus)
        : labels(ls), orient(o) {}

    /// Cell name: "[x,y,z]" when the vertex triple is known.
    std::string cell_name() const {
        if (!vertices)
            return "T(" + labels[0].name + "," + labels[1].name + "," + labels[2].name + ")";
        const auto& v = *vertices;
        return "[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
               std::to_string(v[2]) + "]";
    }

    /// Ordered vertex pair traversed by boundary position i.
    std::pair<VertexId, VertexId> slot_pair(int i) const {
        const auto& v = vertices.value();
        switch (i) {
            case 0: return {v[1], v[2]};
            case 1: return {v[0], v[2]};
            default: return {v[0], v[1]};
        }
    }

    friend bool operator==(const LabeledTriangle&, const LabeledTriangle&) = default;
};

inline std::string to_string(const LabeledTriangle& t) {
    std::string s = (t.orient == Orientation::Plus) ? "T(" : "T^op(";
    return s + t.labels[0].name + "," + t.labels[1].name + "," + t.labels[2].name + ")";
}

/// Labeled boundary of T(a, b, c): the formal label chain a - b + c, negated
/// for the opposite orientation.  This is the label calculus used by the move
/// certificates; it is not the vertex-level boundary of the glued complex.
inline SymbolChain labeled_boundary(const CoefficientGroup& g, const LabeledTriangle& t) {
    SymbolChain out(g, 1);
    int s = (t.orient == Orientation::Plus) ? 1 : -1;
    out.add_term(Symbol(t.labels[0].name), Int(s));
    out.add_term(Symbol(t.labels[1].name), Int(-s));
    out.add_term(Symbol(t.labels[2].name), Int(s));
    return out;
}

/// A surface of labeled triangles.  Sides carrying the same label are the
/// same glued edge; explicit vertex identifications handle gluings whose
/// orientation data is not derivable from shared labels alone.
struct LabeledSurface {
    std::string name;
    std::vector<LabeledTriangle> triangles;
    std::vector<std::pair<VertexId, VertexId>> vertex_glues;
    std::vector<VertexId> declared_vertices;  // optional explicit vertex list

    friend bool operator==(const LabeledSurface&, const LabeledSurface&) = default;
};

struct SlotRef {
    int triangle;  // index into LabeledSurface::triangles
    int slot;      // boundary position 0..2
};

/// All slot occurrences of each label, in declaration order.
inline std::map<std::string, std::vector<SlotRef>> label_occurrences(const LabeledSurface& s) {
    std::map<std::string, std::vector<SlotRef>> occ;
    for (int t = 0; t < static_cast<int>(s.triangles.size()); ++t)
        for (int i = 0; i < 3; ++i)
            occ[s.triangles[t].labels[i].name].push_back({t, i});
    return occ;
}

/// Structural validation shared by every consumer: labels nonempty and
/// distinct within one triangle, and no label used by more than two sides.
inline void validate_surface(const LabeledSurface& s) {
    for (const auto& t : s.triangles) {
        std::set<std::string> seen;
        for (const auto& l : t.labels) {
            if (l.name.empty())
                throw std::invalid_argument("surface '" + s.name + "': triangle missing a label");
            if (!seen.insert(l.name).second)
                throw std::invalid_argument("surface '" + s.name + "': label '" + l.name +
                                            "' repeated within one triangle");
        }
    }
    for (const auto& [label, slots] : label_occurrences(s)) {
        if (slots.size() > 2)
            throw std::invalid_argument("surface '" + s.name + "': label '" + label +
                                        "' used by more than two triangle sides");
    }
}

/// Formal boundary of the surface's total 2-chain in the label calculus.
inline SymbolChain formal_total_boundary(const CoefficientGroup& g, const LabeledSurface& s) {
    SymbolChain out(g, 1);
    for (const auto& t : s.triangles)
        out = chain_add(out, labeled_boundary(g, t));
    return out;
}

/// The surface with every triangle's orientation flag flipped.
inline LabeledSurface reversed(const LabeledSurface& s) {
    LabeledSurface out = s;
    for (auto& t : out.triangles)
        t.orient = reversed(t.orient);
    return out;
}

}  // namespace pachner
