#pragma once

#include "pachner/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pachner {

/// Label assignment for the pentagon on corners c0..c4: sides run
/// d = (c0,c1), c = (c1,c2), b = (c2,c3), a = (c3,c4), e = (c0,c4), and the
/// diagonals are t = (c0,c2), s = (c1,c3), p = (c2,c4), r = (c0,c3),
/// q = (c1,c4).
struct PentagonLabels {
    std::array<VertexId, 5> corners{0, 1, 2, 3, 4};
    std::string a, b, c, d, e;
    std::string t, s, p, r, q;
};

/// One of the five pentagon triangulations, identified by its diagonal pair.
struct PentagonState {
    std::array<std::string, 2> diagonals;  // label names, table order
    LabeledSurface triangulation;
    std::string name;  // "{p,q}" style, from the actual diagonal names
};

struct PentagonStep {
    std::string old_diagonal, new_diagonal;
    MoveCertificate certificate;   // the 2-2 certificate inside the flipped quad
    std::string factor;            // rendered (F(x)id) / (id(x)F) composition factor
};

struct PentagonResult {
    MoveCertificate certificate;   // kind Pentagon, aggregate verdict
    std::vector<PentagonState> states;            // all five, fixed order
    std::vector<int> left_path, right_path;       // indices into states
    std::vector<PentagonStep> left_steps, right_steps;
    std::string left_composition, right_composition;
};

namespace detail {

/// Edge label by sorted corner-index pair.
inline std::map<std::pair<int, int>, std::string> pentagon_edge_names(const PentagonLabels& L) {
    return {
        {{0, 1}, L.d}, {{1, 2}, L.c}, {{2, 3}, L.b}, {{3, 4}, L.a}, {{0, 4}, L.e},
        {{0, 2}, L.t}, {{1, 3}, L.s}, {{2, 4}, L.p}, {{0, 3}, L.r}, {{1, 4}, L.q},
    };
}

inline LabeledTriangle pentagon_triangle(const PentagonLabels& L, int i, int j, int k) {
    auto names = pentagon_edge_names(L);
    LabeledTriangle t;
    t.vertices = {{L.corners[i], L.corners[j], L.corners[k]}};
    t.labels = {EdgeLabel{names.at({j, k})}, EdgeLabel{names.at({i, k})},
                EdgeLabel{names.at({i, j})}};
    return t;
}

inline std::string render_f_symbol(const std::array<std::string, 3>& upper,
                                   const std::array<std::string, 3>& lower) {
    return "F^{" + upper[0] + "*" + upper[1] + "*" + upper[2] + "*}_{" + lower[0] + "*" +
           lower[1] + "*" + lower[2] + "*}";
}

inline std::string render_id_symbol(const LabeledTriangle& spectator) {
    return "id^{" + spectator.labels[1].name + "*}_{" + spectator.labels[0].name + "*" +
           spectator.labels[2].name + "*}";
}

inline bool triangle_in_quad(const std::array<int, 3>& triple, const std::set<int>& quad) {
    for (int v : triple)
        if (!quad.count(v))
            return false;
    return true;
}

inline bool same_triangle(const LabeledTriangle& a, const LabeledTriangle& b) {
    return a.vertices == b.vertices && a.labels[0].name == b.labels[0].name &&
           a.labels[1].name == b.labels[1].name && a.labels[2].name == b.labels[2].name &&
           a.orient == b.orient;
}

inline bool same_triangulation(const LabeledSurface& a, const LabeledSurface& b) {
    if (a.triangles.size() != b.triangles.size())
        return false;
    std::vector<bool> used(b.triangles.size(), false);
    for (const auto& t : a.triangles) {
        bool found = false;
        for (std::size_t i = 0; i < b.triangles.size(); ++i)
            if (!used[i] && same_triangle(t, b.triangles[i])) {
                used[i] = found = true;
                break;
            }
        if (!found)
            return false;
    }
    return true;
}

}  // namespace detail

/// Runs the pentagon identity check: builds the five triangulations, walks
/// the length-2 and length-3 paths of diagonal flips between the common
/// start and end states, certifies every flip as a 2-2 move, and emits the
/// two F-symbol composition strings (reverse-chronological, "(x)" for the
/// tensor sign) whose equality the identity asserts.
inline PentagonResult check_pentagon(const PentagonLabels& L,
                                     const CoefficientGroup& coeff =
                                         CoefficientGroup::integers()) {
    {
        std::set<std::string> names{L.a, L.b, L.c, L.d, L.e, L.t, L.s, L.p, L.r, L.q};
        if (names.size() != 10)
            throw std::invalid_argument("check_pentagon: the ten labels must be distinct");
        for (const auto& n : names)
            if (n.empty())
                throw std::invalid_argument("check_pentagon: empty label");
        std::set<VertexId> corners(L.corners.begin(), L.corners.end());
        if (corners.size() != 5)
            throw std::invalid_argument("check_pentagon: corners must be distinct");
    }

    // Corner-index tables: diagonal endpoints and the five triangulations.
    const std::map<std::string, std::pair<int, int>> diag_ends = {
        {L.t, {0, 2}}, {L.s, {1, 3}}, {L.p, {2, 4}}, {L.r, {0, 3}}, {L.q, {1, 4}}};
    struct StateSpec {
        std::array<std::string, 2> diagonals;
        std::array<std::array<int, 3>, 3> triples;
    };
    const std::vector<StateSpec> specs = {
        {{L.p, L.q}, {{{2, 3, 4}, {1, 2, 4}, {0, 1, 4}}}},
        {{L.t, L.p}, {{{0, 1, 2}, {0, 2, 4}, {2, 3, 4}}}},
        {{L.t, L.r}, {{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}}},
        {{L.q, L.s}, {{{1, 2, 3}, {1, 3, 4}, {0, 1, 4}}}},
        {{L.s, L.r}, {{{0, 1, 3}, {1, 2, 3}, {0, 3, 4}}}},
    };

    PentagonResult out;
    for (const auto& spec : specs) {
        PentagonState st;
        st.diagonals = spec.diagonals;
        st.name = "{" + spec.diagonals[0] + "," + spec.diagonals[1] + "}";
        st.triangulation.name = st.name;
        for (const auto& tr : spec.triples)
            st.triangulation.triangles.push_back(
                detail::pentagon_triangle(L, tr[0], tr[1], tr[2]));
        out.states.push_back(st);
    }
    out.left_path = {0, 1, 2};
    out.right_path = {0, 3, 4, 2};

    bool all_valid = true;
    std::string first_note;
    SymbolChain total(CoefficientGroup::integers(), 1);

    auto run_step = [&](int from, int to) {
        const PentagonState& a = out.states[from];
        const PentagonState& b = out.states[to];
        PentagonStep step;
        for (const auto& d : a.diagonals)
            if (d != b.diagonals[0] && d != b.diagonals[1])
                step.old_diagonal = d;
        for (const auto& d : b.diagonals)
            if (d != a.diagonals[0] && d != a.diagonals[1])
                step.new_diagonal = d;
        auto oe = diag_ends.at(step.old_diagonal);
        auto ne = diag_ends.at(step.new_diagonal);
        std::set<int> quad{oe.first, oe.second, ne.first, ne.second};

        // Index-space triples per state, parallel to the triangle lists.
        const StateSpec& sa = specs[from];
        const StateSpec& sb = specs[to];
        LabeledSurface old_pair, new_pair;
        old_pair.name = a.name;
        new_pair.name = b.name;
        const LabeledTriangle* spectator = nullptr;
        LabeledSurface rest_of_a;
        for (int i = 0; i < 3; ++i) {
            if (detail::triangle_in_quad(sa.triples[i], quad))
                old_pair.triangles.push_back(a.triangulation.triangles[i]);
            else {
                spectator = &a.triangulation.triangles[i];
                rest_of_a.triangles.push_back(a.triangulation.triangles[i]);
            }
        }
        for (int i = 0; i < 3; ++i)
            if (detail::triangle_in_quad(sb.triples[i], quad))
                new_pair.triangles.push_back(b.triangulation.triangles[i]);
        if (old_pair.triangles.size() != 2 || new_pair.triangles.size() != 2 || !spectator)
            throw std::logic_error("check_pentagon: flip does not isolate a quad");

        // The flip must take the old state exactly to the new state.
        LabeledSurface rebuilt = rest_of_a;
        rebuilt.triangles.insert(rebuilt.triangles.end(), new_pair.triangles.begin(),
                                 new_pair.triangles.end());
        if (!detail::same_triangulation(rebuilt, b.triangulation))
            throw std::logic_error("check_pentagon: flip result differs from the state table");

        step.certificate = check_move_22(old_pair, new_pair, coeff);
        if (!step.certificate.valid) {
            all_valid = false;
            if (first_note.empty())
                first_note = "step " + a.name + "->" + b.name + " invalid" +
                             (step.certificate.note.empty() ? "" : ": " + step.certificate.note);
        }
        total = total + step.certificate.total_dual_boundary;

        // F-symbol of the flip: the old triangle carrying the diagonal in
        // its middle slot supplies the lower indices, the one carrying it
        // first supplies the upper ones; the new diagonal closes the upper
        // triple.  The spectator contributes the identity factor, placed
        // left of the tensor sign exactly when it touches the (c0,c4) side.
        const LabeledTriangle* mid = nullptr;
        const LabeledTriangle* first = nullptr;
        for (const auto& t : old_pair.triangles) {
            if (t.labels[1].name == step.old_diagonal)
                mid = &t;
            if (t.labels[0].name == step.old_diagonal)
                first = &t;
        }
        if (!mid || !first)
            throw std::logic_error("check_pentagon: diagonal slots not in expected positions");
        std::string f = detail::render_f_symbol(
            {first->labels[1].name, first->labels[2].name, step.new_diagonal},
            {mid->labels[0].name, mid->labels[2].name, step.old_diagonal});
        std::string id = detail::render_id_symbol(*spectator);
        // Spectator index triple: the one not inside the quad.
        bool id_left = false;
        for (int i = 0; i < 3; ++i)
            if (!detail::triangle_in_quad(sa.triples[i], quad)) {
                const auto& tr = sa.triples[i];
                bool has0 = false, has4 = false;
                for (int v : tr) {
                    has0 |= (v == 0);
                    has4 |= (v == 4);
                }
                id_left = has0 && has4;
            }
        step.factor = id_left ? ("(" + id + "(x)" + f + ")") : ("(" + f + "(x)" + id + ")");
        return step;
    };

    for (std::size_t k = 0; k + 1 < out.left_path.size(); ++k)
        out.left_steps.push_back(run_step(out.left_path[k], out.left_path[k + 1]));
    for (std::size_t k = 0; k + 1 < out.right_path.size(); ++k)
        out.right_steps.push_back(run_step(out.right_path[k], out.right_path[k + 1]));

    // Reverse-chronological composition strings.
    for (auto it = out.left_steps.rbegin(); it != out.left_steps.rend(); ++it)
        out.left_composition += it->factor;
    out.right_composition =
        "sum_{" + out.right_steps.front().new_diagonal + " in C*1}";
    for (auto it = out.right_steps.rbegin(); it != out.right_steps.rend(); ++it)
        out.right_composition += it->factor;

    bool endpoints_equal = detail::same_triangulation(
        out.states[out.left_path.back()].triangulation,
        out.states[out.right_path.back()].triangulation);
    bool five_distinct = true;
    for (std::size_t i = 0; i < out.states.size(); ++i)
        for (std::size_t j = i + 1; j < out.states.size(); ++j)
            if (detail::same_triangulation(out.states[i].triangulation,
                                           out.states[j].triangulation))
                five_distinct = false;

    MoveCertificate& cert = out.certificate;
    cert.kind = MoveKind::Pentagon;
    cert.boundary_labels_match = all_valid;
    cert.total_dual_boundary = total;
    cert.coefficient_index_count = 10;
    cert.glued = out.states[0].triangulation;
    cert.note = first_note;
    if (!endpoints_equal && cert.note.empty())
        cert.note = "paths end at different triangulations";
    if (!five_distinct && cert.note.empty())
        cert.note = "pentagon states are not pairwise distinct";
    cert.valid = all_valid && endpoints_equal && five_distinct && total.is_zero();
    return out;
}

}  // namespace pachner
