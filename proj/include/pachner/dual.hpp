#pragma once

#include "pachner/labeled.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pachner {

/// State-space name attached to a dual vertex: H(a*,b*,c*) for a positively
/// oriented triangle T(a,b,c), H^op(a*,b*,c*) for its reverse.
inline std::string state_space_label(const LabeledTriangle& t) {
    std::string head = (t.orient == Orientation::Plus) ? "H" : "H^op";
    return head + "(" + t.labels[0].name + "*," + t.labels[1].name + "*," + t.labels[2].name +
           "*)";
}

/// One trivalent vertex of the dual graph; legs list the starred labels of
/// the three crossed edges in slot order.
struct DualVertex {
    int triangle = 0;  // index into the source surface
    Orientation orient = Orientation::Plus;
    std::string state_space;
    std::array<std::string, 3> legs;
};

/// One dual edge, crossing the original edge with the same (starred) label.
/// Interior edges join two dual vertices; boundary edges dangle as
/// half-edges from a single one.
struct DualEdge {
    std::string label;  // starred, e.g. "m*"
    bool interior = false;
    int vertex_a = 0, slot_a = 0;
    int vertex_b = -1, slot_b = -1;  // meaningful iff interior
};

struct DualComplex {
    std::vector<DualVertex> vertices;  // one per triangle
    std::vector<DualEdge> edges;       // one per distinct edge label

    int vertex_degree(int v) const {
        int deg = 0;
        for (const auto& e : edges) {
            if (e.vertex_a == v)
                ++deg;
            if (e.interior && e.vertex_b == v)
                ++deg;
        }
        return deg;
    }
    int interior_edge_count() const {
        int n = 0;
        for (const auto& e : edges)
            n += e.interior ? 1 : 0;
        return n;
    }
    int half_edge_count() const { return static_cast<int>(edges.size()) - interior_edge_count(); }
};

/// Dual cell structure of a labeled surface: a vertex inside each triangle,
/// an edge crossing each original edge.  Every dual vertex is trivalent by
/// construction; the invariant is still asserted.
inline DualComplex poincare_dual(const LabeledSurface& s) {
    validate_surface(s);
    DualComplex d;
    for (int i = 0; i < static_cast<int>(s.triangles.size()); ++i) {
        const auto& t = s.triangles[i];
        DualVertex v;
        v.triangle = i;
        v.orient = t.orient;
        v.state_space = state_space_label(t);
        for (int k = 0; k < 3; ++k)
            v.legs[k] = t.labels[k].name + "*";
        d.vertices.push_back(v);
    }
    for (const auto& [label, slots] : label_occurrences(s)) {
        DualEdge e;
        e.label = label + "*";
        e.vertex_a = slots[0].triangle;
        e.slot_a = slots[0].slot;
        if (slots.size() == 2) {
            e.interior = true;
            e.vertex_b = slots[1].triangle;
            e.slot_b = slots[1].slot;
        }
        d.edges.push_back(e);
    }
    for (int v = 0; v < static_cast<int>(d.vertices.size()); ++v)
        if (d.vertex_degree(v) != 3)
            throw std::logic_error("poincare_dual: dual vertex of degree != 3");
    return d;
}

}  // namespace pachner
