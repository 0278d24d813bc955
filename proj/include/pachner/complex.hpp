#pragma once

#include "pachner/cochain.hpp"
#include "pachner/labeled.hpp"
#include "pachner/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pachner {

/// Finite simplicial complex: canonical simplices per dimension, closed under
/// faces.  Basis orderings are the sorted simplex lists and are part of the
/// public contract of boundary_matrix.
class SimplicialComplex {
public:
    static SimplicialComplex from_top_cells(const std::vector<OrientedSimplex>& top) {
        SimplicialComplex c;
        std::set<OrientedSimplex> all;
        for (const auto& s : top) {
            NormalizedSimplex n = normalize_simplex(s.vertices);
            if (n.sign == 0)
                throw std::invalid_argument("SimplicialComplex: degenerate top cell " +
                                            to_string(s));
            close_under_faces(n.simplex, all);
        }
        for (const auto& s : all) {
            int d = s.dimension();
            if (d >= static_cast<int>(c.cells_.size()))
                c.cells_.resize(d + 1);
            c.cells_[d].push_back(s);
        }
        for (auto& level : c.cells_)
            std::sort(level.begin(), level.end());
        return c;
    }

    int dim() const { return static_cast<int>(cells_.size()) - 1; }

    const std::vector<OrientedSimplex>& cells(int d) const {
        static const std::vector<OrientedSimplex> empty;
        if (d < 0 || d > dim())
            return empty;
        return cells_[d];
    }

    int index_of(int d, const OrientedSimplex& s) const {
        const auto& level = cells(d);
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s)
            return -1;
        return static_cast<int>(it - level.begin());
    }

private:
    static void close_under_faces(const OrientedSimplex& s, std::set<OrientedSimplex>& out) {
        if (!out.insert(s).second)
            return;
        if (s.dimension() == 0)
            return;
        for (int i = 0; i <= s.dimension(); ++i)
            close_under_faces(face(s, i), out);
    }

    std::vector<std::vector<OrientedSimplex>> cells_;
};

/// Boundary matrix of the complex in degree n: rows indexed by the (n-1)-cell
/// basis, columns by the n-cell basis.  Out-of-range degrees give the
/// zero-dimension matrix.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& c, int n) {
    if (n < 1 || n > c.dim())
        return IntegerMatrix(n == 0 ? 0 : static_cast<int>(c.cells(n - 1).size()), 0);
    const auto& rows = c.cells(n - 1);
    const auto& cols = c.cells(n);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
        for (int i = 0; i <= n; ++i) {
            int r = c.index_of(n - 1, face(cols[j], i));
            m.at(r, j) += (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

/// Coboundary against a complex: (delta phi)(s) = phi(boundary s) tabulated
/// over the (n+1)-cell basis.
inline SimplexCochain coboundary(const SimplexCochain& phi, const SimplicialComplex& c) {
    SimplexCochain out(phi.group(), phi.degree() + 1);
    for (const auto& s : c.cells(phi.degree() + 1)) {
        SimplexChain b = boundary(phi.group(), s);
        Int v = evaluate(phi, b);
        if (v != 0)
            out.add_term(s, v);
    }
    return out;
}

/// The glued cell structure of one or more labeled surfaces sharing a vertex
/// namespace: vertex classes, one edge cell per label, one 2-cell per
/// triangle.  Boundary maps are the vertex-level ones of the quotient
/// Delta-complex, so d1 * d2 = 0 holds by construction.
struct GluedComplex {
    std::vector<VertexId> vertex_classes;            // sorted class representatives
    std::vector<Symbol> edges;                       // sorted edge labels
    std::vector<std::string> faces;                  // triangle cell names, declaration order
    std::vector<LabeledTriangle> face_triangles;     // parallel to faces
    std::map<Symbol, std::pair<VertexId, VertexId>> edge_ends;  // canonical tail/head classes
    IntegerMatrix d1{0, 0};                          // |V| x |E|
    IntegerMatrix d2{0, 0};                          // |E| x |F|

    int vertex_index(VertexId v) const {
        auto it = std::lower_bound(vertex_classes.begin(), vertex_classes.end(), v);
        return static_cast<int>(it - vertex_classes.begin());
    }
    int edge_index(const Symbol& s) const {
        auto it = std::lower_bound(edges.begin(), edges.end(), s);
        if (it == edges.end() || *it != s)
            return -1;
        return static_cast<int>(it - edges.begin());
    }
    long euler_characteristic() const {
        return static_cast<long>(vertex_classes.size()) - static_cast<long>(edges.size()) +
               static_cast<long>(faces.size());
    }
};

namespace detail {

class VertexUnion {
public:
    VertexId find(VertexId v) {
        auto it = parent_.find(v);
        if (it == parent_.end()) {
            parent_[v] = v;
            return v;
        }
        if (it->second == v)
            return v;
        VertexId root = find(it->second);
        parent_[v] = root;
        return root;
    }
    void unite(VertexId a, VertexId b) {
        VertexId ra = find(a), rb = find(b);
        if (ra == rb)
            return;
        // Smaller id wins, keeping class representatives deterministic.
        if (rb < ra)
            std::swap(ra, rb);
        parent_[rb] = ra;
    }

private:
    std::map<VertexId, VertexId> parent_;
};

}  // namespace detail

/// Builds the glued complex of several surfaces (document-global vertex ids).
/// Rejects labels whose occurrences do not form one well-defined edge cell.
inline GluedComplex build_glued_complex(const std::vector<LabeledSurface>& surfaces) {
    GluedComplex g;
    detail::VertexUnion uf;

    for (const auto& s : surfaces) {
        validate_surface(s);
        for (const auto& t : s.triangles)
            if (!t.vertices)
                throw std::invalid_argument("glued complex: triangle " + to_string(t) +
                                            " has no vertex triple");
        for (const auto& [a, b] : s.vertex_glues)
            uf.unite(a, b);
    }

    struct Occurrence {
        VertexId tail, head;  // raw (unglued) endpoints
    };
    std::map<std::string, std::vector<Occurrence>> occ;
    std::set<VertexId> vertex_set;
    for (const auto& s : surfaces) {
        for (VertexId v : s.declared_vertices)
            vertex_set.insert(uf.find(v));
        for (const auto& [a, b] : s.vertex_glues) {
            vertex_set.insert(uf.find(a));
            vertex_set.insert(uf.find(b));
        }
        for (const auto& t : s.triangles) {
            for (VertexId v : *t.vertices)
                vertex_set.insert(uf.find(v));
            for (int i = 0; i < 3; ++i) {
                auto [u, v] = t.slot_pair(i);
                occ[t.labels[i].name].push_back({u, v});
            }
        }
    }

    g.vertex_classes.assign(vertex_set.begin(), vertex_set.end());

    // One edge cell per label; the first occurrence fixes the canonical
    // direction.  Later occurrences must span the same class pair.
    for (auto& [label, list] : occ) {
        if (list.size() > 2)
            throw std::invalid_argument("glued complex: label '" + label +
                                        "' used by more than two triangle sides");
        VertexId ct = uf.find(list[0].tail), ch = uf.find(list[0].head);
        for (const auto& o : list) {
            VertexId ot = uf.find(o.tail), oh = uf.find(o.head);
            bool same = (ot == ct && oh == ch);
            bool anti = (ot == ch && oh == ct);
            if (!same && !anti)
                throw std::invalid_argument("glued complex: label '" + label +
                                            "' used across distinct edges");
            if (ct == ch && !(o.tail == list[0].tail && o.head == list[0].head) &&
                !(o.tail == list[0].head && o.head == list[0].tail))
                throw std::invalid_argument("glued complex: ambiguous loop identification for "
                                            "label '" + label + "'");
        }
        g.edges.push_back(Symbol(label));
        g.edge_ends[Symbol(label)] = {ct, ch};
    }
    std::sort(g.edges.begin(), g.edges.end());

    for (const auto& s : surfaces)
        for (const auto& t : s.triangles) {
            g.faces.push_back(t.cell_name());
            g.face_triangles.push_back(t);
        }

    // d2: vertex-level boundary of each triangle, expressed over edge cells
    // with a sign comparing the slot traversal to the canonical direction.
    g.d2 = IntegerMatrix(static_cast<int>(g.edges.size()), static_cast<int>(g.faces.size()));
    int col = 0;
    for (const auto& s : surfaces)
        for (const auto& t : s.triangles) {
            int orient = (t.orient == Orientation::Plus) ? 1 : -1;
            for (int i = 0; i < 3; ++i) {
                auto [u, v] = t.slot_pair(i);
                Symbol e(t.labels[i].name);
                auto [ct, ch] = g.edge_ends.at(e);
                VertexId cu = uf.find(u), cv = uf.find(v);
                int dir;
                if (ct == ch) {
                    // Loop: compare raw endpoints (validated unambiguous above).
                    const auto& first = occ.at(e.name)[0];
                    dir = (u == first.tail && v == first.head) ? 1 : -1;
                } else {
                    dir = (cu == ct && cv == ch) ? 1 : -1;
                }
                int slot_sign = (i == 1) ? -1 : 1;
                g.d2.at(g.edge_index(e), col) += Int(orient * slot_sign * dir);
            }
            ++col;
        }

    // d1: head minus tail of the canonical direction.
    g.d1 = IntegerMatrix(static_cast<int>(g.vertex_classes.size()),
                         static_cast<int>(g.edges.size()));
    for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
        auto [ct, ch] = g.edge_ends.at(g.edges[j]);
        if (ct != ch) {
            g.d1.at(g.vertex_index(ch), j) += 1;
            g.d1.at(g.vertex_index(ct), j) -= 1;
        }
    }

    if (!multiply(g.d1, g.d2).is_zero())
        throw std::logic_error("glued complex: d1 * d2 != 0");
    return g;
}

inline GluedComplex build_glued_complex(const LabeledSurface& s) {
    return build_glued_complex(std::vector<LabeledSurface>{s});
}

/// Boundary matrix of the glued complex: n = 1 gives d1, n = 2 gives d2.
inline IntegerMatrix boundary_matrix(const GluedComplex& g, int n) {
    if (n == 1)
        return g.d1;
    if (n == 2)
        return g.d2;
    if (n == 0)
        return IntegerMatrix(0, static_cast<int>(g.vertex_classes.size()));
    return IntegerMatrix(0, 0);
}

/// Coboundary in the label calculus: a 1-cochain on edge labels pulled back
/// along the formal labeled boundary of each 2-cell.
inline SymbolCochain coboundary_labeled(const SymbolCochain& phi, const LabeledSurface& s) {
    if (phi.degree() != 1)
        throw std::invalid_argument("coboundary_labeled: expected a degree-1 cochain");
    SymbolCochain out(phi.group(), 2);
    for (const auto& t : s.triangles) {
        SymbolChain b = labeled_boundary(phi.group(), t);
        // Pair against the formal label chain directly.
        Int v = 0;
        for (const auto& [k, c] : b.terms())
            v += phi.coefficient(k) * c;
        v = phi.group().reduce(v);
        if (v != 0)
            out.add_term(Symbol(t.cell_name()), v);
    }
    return out;
}

}  // namespace pachner
