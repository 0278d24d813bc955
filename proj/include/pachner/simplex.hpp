#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

using VertexId = int;

/// An oriented simplex [v0, ..., vn].  Canonical form has strictly increasing
/// vertices; normalize_simplex produces it together with the orientation sign.
struct OrientedSimplex {
    std::vector<VertexId> vertices;

    OrientedSimplex() = default;
    explicit OrientedSimplex(std::vector<VertexId> vs) : vertices(std::move(vs)) {}
    OrientedSimplex(std::initializer_list<VertexId> vs) : vertices(vs) {}

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    auto operator<=>(const OrientedSimplex&) const = default;
};

inline std::string to_string(const OrientedSimplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s.vertices[i]);
    }
    return out + "]";
}

struct NormalizedSimplex {
    OrientedSimplex simplex;  // canonical vertex order
    int sign;                 // +1 / -1 permutation parity; 0 if degenerate
};

/// Sorts the vertex list and reports the permutation parity.  A repeated
/// vertex makes the simplex degenerate: sign 0, simplex kept sorted.
inline NormalizedSimplex normalize_simplex(std::vector<VertexId> vertices) {
    // Parity by inversion count; quadratic, but simplices here are tiny.
    int inversions = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) {
                std::sort(vertices.begin(), vertices.end());
                return {OrientedSimplex(std::move(vertices)), 0};
            }
            if (vertices[i] > vertices[j])
                ++inversions;
        }
    }
    std::sort(vertices.begin(), vertices.end());
    return {OrientedSimplex(std::move(vertices)), (inversions % 2 == 0) ? +1 : -1};
}

/// The i-th face [v0,...,v̂i,...,vn].
inline OrientedSimplex face(const OrientedSimplex& s, int i) {
    std::vector<VertexId> vs;
    vs.reserve(s.vertices.size() - 1);
    for (int j = 0; j < static_cast<int>(s.vertices.size()); ++j)
        if (j != i)
            vs.push_back(s.vertices[j]);
    return OrientedSimplex(std::move(vs));
}

}  // namespace pachner
