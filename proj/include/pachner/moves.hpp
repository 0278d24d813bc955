#pragma once

#include "pachner/dual.hpp"
#include "pachner/homology.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

enum class MoveKind { Move22, Move13, Cylinder, Pentagon };

inline std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Move22: return "22";
        case MoveKind::Move13: return "13";
        case MoveKind::Cylinder: return "CYLINDER";
        case MoveKind::Pentagon: return "PENTAGON";
    }
    return "?";
}

/// Machine-checkable evidence that a move preserves the invariant: matching
/// boundary labels, a glued closed surface whose total dual 2-chain has zero
/// boundary, and (for the Pachner moves) sphere homology.
struct MoveCertificate {
    MoveKind kind = MoveKind::Move22;
    bool boundary_labels_match = false;
    LabeledSurface glued;
    SymbolChain total_dual_boundary{CoefficientGroup::integers(), 1};
    int coefficient_index_count = 0;
    std::vector<GroupDescriptor> homology;  // H0, H1, H2 when computed
    long euler = 0;
    int kronecker_factor = -1;  // Cylinder only
    std::string route;          // Move13: composition through a 2-2 move
    std::string note;           // first failure detail, empty when clean
    bool valid = false;
};

namespace detail {

inline std::pair<VertexId, VertexId> sorted_pair(std::pair<VertexId, VertexId> p) {
    if (p.second < p.first)
        std::swap(p.first, p.second);
    return p;
}

inline std::string pair_name(const std::pair<VertexId, VertexId>& p) {
    return "[" + std::to_string(p.first) + "," + std::to_string(p.second) + "]";
}

/// Labels used exactly once, keyed by the undirected vertex pair they span.
inline std::map<std::pair<VertexId, VertexId>, std::string> boundary_edge_map(
    const LabeledSurface& s) {
    std::map<std::pair<VertexId, VertexId>, std::string> out;
    auto occ = label_occurrences(s);
    for (const auto& [label, slots] : occ) {
        if (slots.size() != 1)
            continue;
        const auto& t = s.triangles[slots[0].triangle];
        out[sorted_pair(t.slot_pair(slots[0].slot))] = label;
    }
    return out;
}

inline bool descriptor_is_full_group(const GroupDescriptor& g) {
    return g.free_rank == 1 && g.torsion.empty();
}

inline bool sphere_signature(const std::vector<GroupDescriptor>& h) {
    return h.size() == 3 && descriptor_is_full_group(h[0]) && h[1].is_zero() &&
           descriptor_is_full_group(h[2]);
}

inline int distinct_label_count(const LabeledSurface& s) {
    return static_cast<int>(label_occurrences(s).size());
}

}  // namespace detail

/// Glues the second surface orientation-reversed onto the first; vertex ids
/// are shared, so coincident ids identify.
inline LabeledSurface glue_reversed(const LabeledSurface& kept, const LabeledSurface& flipped) {
    LabeledSurface out = kept;
    out.name = kept.name + "+" + flipped.name + "^op";
    LabeledSurface r = reversed(flipped);
    out.triangles.insert(out.triangles.end(), r.triangles.begin(), r.triangles.end());
    out.vertex_glues.insert(out.vertex_glues.end(), r.vertex_glues.begin(),
                            r.vertex_glues.end());
    return out;
}

namespace detail {

/// Shared tail of the 2-2 / 1-3 checks: glue, take the formal dual boundary,
/// and test for the sphere signature.
inline void certify_glued_sphere(MoveCertificate& cert, const LabeledSurface& kept,
                                 const LabeledSurface& flipped, const CoefficientGroup& coeff) {
    cert.glued = glue_reversed(kept, flipped);
    cert.total_dual_boundary =
        formal_total_boundary(CoefficientGroup::integers(), cert.glued);
    cert.coefficient_index_count = distinct_label_count(cert.glued);
    try {
        GluedComplex gc = build_glued_complex(cert.glued);
        ChainComplexData data = complex_data(gc);
        cert.euler = gc.euler_characteristic();
        for (int n = 0; n <= 2; ++n)
            cert.homology.push_back(homology_group(data, n, coeff));
    } catch (const std::exception& e) {
        cert.note = std::string("glued complex rejected: ") + e.what();
        cert.valid = false;
        return;
    }
    bool sphere = sphere_signature(cert.homology);
    if (!sphere && cert.note.empty())
        cert.note = "glued complex does not have sphere homology";
    cert.valid = cert.boundary_labels_match && cert.total_dual_boundary.is_zero() && sphere;
    if (!cert.total_dual_boundary.is_zero() && cert.note.empty())
        cert.note = "total dual boundary " + format_chain(cert.total_dual_boundary, true);
}

}  // namespace detail

/// 2-2 (diagonal flip) certificate: both squares must present the same
/// labeled boundary cycle; the flipped copy is glued on orientation-reversed
/// and the closed result must be a homology sphere with zero dual boundary.
inline MoveCertificate check_move_22(const LabeledSurface& left, const LabeledSurface& right,
                                     const CoefficientGroup& coeff =
                                         CoefficientGroup::integers()) {
    validate_surface(left);
    validate_surface(right);
    if (left.triangles.size() != 2 || right.triangles.size() != 2)
        throw std::invalid_argument("check_move_22: each side must have exactly 2 triangles");
    for (const auto& t : left.triangles)
        if (!t.vertices)
            throw std::invalid_argument("check_move_22: left triangle lacks vertices");
    for (const auto& t : right.triangles)
        if (!t.vertices)
            throw std::invalid_argument("check_move_22: right triangle lacks vertices");

    MoveCertificate cert;
    cert.kind = MoveKind::Move22;

    auto lb = detail::boundary_edge_map(left);
    auto rb = detail::boundary_edge_map(right);
    cert.boundary_labels_match = true;
    if (lb.size() != 4 || rb.size() != 4) {
        cert.boundary_labels_match = false;
        cert.note = "expected 4 boundary edges per square";
    } else {
        for (const auto& [pair, label] : lb) {
            auto it = rb.find(pair);
            if (it == rb.end()) {
                cert.boundary_labels_match = false;
                cert.note = "boundary edge " + detail::pair_name(pair) +
                            " missing on the right";
                break;
            }
            if (it->second != label) {
                cert.boundary_labels_match = false;
                cert.note = "boundary label mismatch at " + detail::pair_name(pair) +
                            ": left " + label + ", right " + it->second;
                break;
            }
        }
    }

    if (!cert.boundary_labels_match) {
        // The formal dual boundary is still well defined from labels alone.
        cert.glued = glue_reversed(left, right);
        cert.total_dual_boundary =
            formal_total_boundary(CoefficientGroup::integers(), cert.glued);
        cert.coefficient_index_count = detail::distinct_label_count(cert.glued);
        cert.valid = false;
        return cert;
    }

    detail::certify_glued_sphere(cert, left, right, coeff);
    return cert;
}

/// Splits a triangle T(a,b,c) on (x,y,z) at a new apex w, producing the
/// three-triangle fan (w,x,y) = T(c,n,i), (w,y,z) = T(a,j,n),
/// (w,x,z) = T^op(b,j,i) with fresh interior labels i = [w,x], n = [w,y],
/// j = [w,z].
inline LabeledSurface split_13(const LabeledTriangle& t, VertexId apex,
                               const std::string& i_name, const std::string& n_name,
                               const std::string& j_name) {
    if (!t.vertices)
        throw std::invalid_argument("split_13: triangle lacks vertices");
    if (t.orient != Orientation::Plus)
        throw std::invalid_argument("split_13: expected a positively oriented triangle");
    auto [x, y, z] = *t.vertices;
    if (apex == x || apex == y || apex == z)
        throw std::invalid_argument("split_13: apex must be a fresh vertex");
    const std::string a = t.labels[0].name, b = t.labels[1].name, c = t.labels[2].name;
    std::set<std::string> fresh{i_name, n_name, j_name};
    if (fresh.size() != 3 || fresh.count(a) || fresh.count(b) || fresh.count(c))
        throw std::invalid_argument("split_13: interior labels must be fresh and distinct");

    LabeledSurface s;
    s.name = "split";
    LabeledTriangle t1;  // (w,x,y) = T(c, n, i)
    t1.vertices = {{apex, x, y}};
    t1.labels = {EdgeLabel{c}, EdgeLabel{n_name}, EdgeLabel{i_name}};
    LabeledTriangle t2;  // (w,y,z) = T(a, j, n)
    t2.vertices = {{apex, y, z}};
    t2.labels = {EdgeLabel{a}, EdgeLabel{j_name}, EdgeLabel{n_name}};
    LabeledTriangle t3;  // (w,x,z) = T^op(b, j, i)
    t3.vertices = {{apex, x, z}};
    t3.labels = {EdgeLabel{b}, EdgeLabel{j_name}, EdgeLabel{i_name}};
    t3.orient = Orientation::Op;
    s.triangles = {t1, t2, t3};
    return s;
}

/// Inverse of split_13, performed as the composite the certificate records:
/// one 2-2 flip of the two same-oriented triangles (replacing the interior
/// diagonal by the outer edge), after which the flipped-in triangle cancels
/// the odd-oriented one and the outer triangle remains.
inline LabeledTriangle fuse_13(const LabeledSurface& split, std::string* route = nullptr) {
    validate_surface(split);
    if (split.triangles.size() != 3)
        throw std::invalid_argument("fuse_13: expected exactly 3 triangles");
    for (const auto& t : split.triangles)
        if (!t.vertices)
            throw std::invalid_argument("fuse_13: triangle lacks vertices");

    // The apex is the vertex common to all three triangles.
    std::map<VertexId, int> count;
    for (const auto& t : split.triangles)
        for (VertexId v : *t.vertices)
            ++count[v];
    std::optional<VertexId> apex;
    std::vector<VertexId> rim;
    for (const auto& [v, c] : count) {
        if (c == 3)
            apex = v;
        else if (c == 2)
            rim.push_back(v);
    }
    if (!apex || rim.size() != 3)
        throw std::invalid_argument("fuse_13: not a one-apex fan");

    // The odd-oriented triangle misses one rim vertex: that vertex carries
    // the flipped diagonal.
    int plus = 0;
    for (const auto& t : split.triangles)
        plus += (t.orient == Orientation::Plus) ? 1 : 0;
    if (plus != 1 && plus != 2)
        throw std::invalid_argument("fuse_13: orientations do not form a split");
    Orientation majority = (plus == 2) ? Orientation::Plus : Orientation::Op;
    int odd_index = -1;
    for (int i = 0; i < 3; ++i)
        if (split.triangles[i].orient != majority)
            odd_index = i;
    const auto& odd = split.triangles[odd_index];
    std::set<VertexId> odd_set(odd.vertices->begin(), odd.vertices->end());
    VertexId mid = -1;
    for (VertexId v : rim)
        if (!odd_set.count(v))
            mid = v;

    // Boundary labels keyed by rim pair reconstruct the outer triangle.
    auto bmap = detail::boundary_edge_map(split);
    if (bmap.size() != 3)
        throw std::invalid_argument("fuse_13: expected exactly 3 boundary edges");
    std::sort(rim.begin(), rim.end());
    auto [x, y, z] = std::array<VertexId, 3>{rim[0], rim[1], rim[2]};
    auto need = [&](VertexId u, VertexId v) {
        auto it = bmap.find(detail::sorted_pair({u, v}));
        if (it == bmap.end())
            throw std::invalid_argument("fuse_13: boundary edge missing");
        return it->second;
    };
    LabeledTriangle out;
    out.vertices = {{x, y, z}};
    out.labels = {EdgeLabel{need(y, z)}, EdgeLabel{need(x, z)}, EdgeLabel{need(x, y)}};
    out.orient = majority;

    if (route) {
        // Interior diagonal at the mid vertex flips to the outer edge label
        // opposite the apex fan; the resulting pair on the odd cell cancels.
        std::string diag;
        for (const auto& [label, slots] : label_occurrences(split))
            if (slots.size() == 2) {
                const auto& t0 = split.triangles[slots[0].triangle];
                auto p = t0.slot_pair(slots[0].slot);
                if ((p.first == *apex && p.second == mid) ||
                    (p.first == mid && p.second == *apex))
                    diag = label;
            }
        std::string outer = need(x == mid ? y : x, z == mid ? y : z);
        *route = "22:" + diag + "->" + outer + ";cancel:" + odd.cell_name();
    }
    return out;
}

/// 1-3 (stellar subdivision) certificate: the split fan must close up at its
/// apex and present the unsplit triangle's labels on the rim; gluing the
/// reversed unsplit triangle closes the sphere.
inline MoveCertificate check_move_13(const LabeledTriangle& unsplit,
                                     const LabeledSurface& split,
                                     const CoefficientGroup& coeff =
                                         CoefficientGroup::integers()) {
    if (!unsplit.vertices)
        throw std::invalid_argument("check_move_13: unsplit triangle lacks vertices");
    validate_surface(split);
    if (split.triangles.size() != 3)
        throw std::invalid_argument("check_move_13: split side must have exactly 3 triangles");
    for (const auto& t : split.triangles)
        if (!t.vertices)
            throw std::invalid_argument("check_move_13: split triangle lacks vertices");

    MoveCertificate cert;
    cert.kind = MoveKind::Move13;

    // Interior labels (used twice) must all be incident to one apex vertex.
    std::map<VertexId, int> count;
    for (const auto& t : split.triangles)
        for (VertexId v : *t.vertices)
            ++count[v];
    std::optional<VertexId> apex;
    for (const auto& [v, c] : count)
        if (c == 3)
            apex = v;
    cert.boundary_labels_match = true;
    if (!apex) {
        cert.boundary_labels_match = false;
        cert.note = "split fan has no common apex vertex";
    } else {
        for (const auto& [label, slots] : label_occurrences(split)) {
            if (slots.size() != 2)
                continue;
            for (const auto& sr : slots) {
                auto p = split.triangles[sr.triangle].slot_pair(sr.slot);
                if (p.first != *apex && p.second != *apex) {
                    cert.boundary_labels_match = false;
                    cert.note = "interior label '" + label +
                                "' does not close up at the interior vertex";
                }
            }
        }
    }

    // Rim labels must reproduce the unsplit triangle's slots.
    if (cert.boundary_labels_match) {
        auto bmap = detail::boundary_edge_map(split);
        for (int i = 0; i < 3; ++i) {
            auto pair = detail::sorted_pair(unsplit.slot_pair(i));
            auto it = bmap.find(pair);
            if (it == bmap.end()) {
                cert.boundary_labels_match = false;
                cert.note = "boundary edge " + detail::pair_name(pair) +
                            " missing from the split side";
                break;
            }
            if (it->second != unsplit.labels[i].name) {
                cert.boundary_labels_match = false;
                cert.note = "boundary label mismatch at " + detail::pair_name(pair) +
                            ": unsplit " + unsplit.labels[i].name + ", split " + it->second;
                break;
            }
        }
    }

    LabeledSurface unsplit_surface;
    unsplit_surface.name = "unsplit";
    unsplit_surface.triangles = {unsplit};

    if (!cert.boundary_labels_match) {
        cert.glued = glue_reversed(split, unsplit_surface);
        cert.total_dual_boundary =
            formal_total_boundary(CoefficientGroup::integers(), cert.glued);
        cert.coefficient_index_count = detail::distinct_label_count(cert.glued);
        cert.valid = false;
        return cert;
    }

    detail::certify_glued_sphere(cert, split, unsplit_surface, coeff);
    try {
        std::string route;
        fuse_13(split, &route);
        cert.route = route;
    } catch (const std::exception&) {
        // Route is informational; certificate validity is already decided.
    }
    return cert;
}

/// Cylinder rule: the two-triangle cylinder evaluates to the Kronecker
/// factor [i = j].  The doubled cylinder (a torus) is attached as evidence;
/// its chain complex is built cell-to-cell so the two boundary circles stay
/// distinct cells even when their labels coincide.
inline MoveCertificate check_cylinder(const LabeledSurface& c,
                                      const CoefficientGroup& coeff =
                                          CoefficientGroup::integers()) {
    validate_surface(c);
    if (c.triangles.size() != 2)
        throw std::invalid_argument("not a cylinder: expected exactly 2 triangles");
    for (const auto& t : c.triangles)
        if (!t.vertices)
            throw std::invalid_argument("not a cylinder: triangle lacks vertices");
    const LabeledTriangle* plus = nullptr;
    const LabeledTriangle* op = nullptr;
    for (const auto& t : c.triangles)
        (t.orient == Orientation::Plus ? plus : op) = &t;
    if (!plus || !op)
        throw std::invalid_argument("not a cylinder: need one Plus and one Op triangle");

    detail::VertexUnion uf;
    for (const auto& [a, b] : c.vertex_glues)
        uf.unite(a, b);
    std::set<VertexId> classes;
    for (const auto& t : c.triangles)
        for (VertexId v : *t.vertices)
            classes.insert(uf.find(v));
    if (classes.size() != 2)
        throw std::invalid_argument("not a cylinder: expected exactly 2 vertex classes");

    const std::string side = plus->labels[0].name, diag = plus->labels[2].name;
    const std::string i_name = plus->labels[1].name, j_name = op->labels[1].name;
    if (op->labels[0].name != side || op->labels[2].name != diag || side == diag ||
        side == i_name || side == j_name || diag == i_name || diag == j_name)
        throw std::invalid_argument("not a cylinder: side/diagonal labels malformed");

    auto cls = [&](std::pair<VertexId, VertexId> p) {
        return std::pair<VertexId, VertexId>{uf.find(p.first), uf.find(p.second)};
    };
    auto ps = cls(plus->slot_pair(0)), os = cls(op->slot_pair(0));
    auto pd = cls(plus->slot_pair(2)), od = cls(op->slot_pair(2));
    auto pl = cls(plus->slot_pair(1)), ol = cls(op->slot_pair(1));
    bool sides_anti = (ps.first != ps.second) && (os.first == ps.second) &&
                      (os.second == ps.first);
    bool diags_anti = (pd.first != pd.second) && (od.first == pd.second) &&
                      (od.second == pd.first);
    bool loops_ok = (pl.first == pl.second) && (ol.first == ol.second) &&
                    (pl.first != ol.first);
    if (!sides_anti || !diags_anti || !loops_ok)
        throw std::invalid_argument("not a cylinder: boundary count / gluing pattern wrong");

    MoveCertificate cert;
    cert.kind = MoveKind::Cylinder;
    cert.boundary_labels_match = true;
    cert.glued = c;
    cert.total_dual_boundary = formal_total_boundary(CoefficientGroup::integers(), c);
    cert.coefficient_index_count = detail::distinct_label_count(c);
    cert.kronecker_factor = (i_name == j_name) ? 1 : 0;

    // Torus evidence: rows (A, B) are the two vertex classes, edge cells are
    // (circle at A, circle at B, side_1, diag_1, side_2, diag_2), faces are
    // the four triangles of the doubled cylinder (second copy reversed).
    ChainComplexData torus;
    torus.dims = {2, 6, 4};
    IntegerMatrix d1(2, 6), d2(6, 4);
    d1.at(0, 2) = 1;  d1.at(1, 2) = -1;  // side_1 canonically B -> A
    d1.at(0, 3) = -1; d1.at(1, 3) = 1;   // diag_1 canonically A -> B
    d1.at(0, 4) = 1;  d1.at(1, 4) = -1;
    d1.at(0, 5) = -1; d1.at(1, 5) = 1;
    const int plus_col[6] = {-1, 0, 1, 1, 0, 0};
    const int op_col[6] = {0, 1, 1, 1, 0, 0};
    for (int r = 0; r < 6; ++r) {
        d2.at(r, 0) = plus_col[r];
        d2.at(r, 1) = op_col[r];
        int rr = (r >= 2) ? r + 2 : r;          // copy 2 uses side_2/diag_2
        if (rr < 6) {
            d2.at(rr, 2) = -plus_col[r];        // second copy reversed
            d2.at(rr, 3) = -op_col[r];
        }
    }
    torus.boundaries = {IntegerMatrix(0, 0), d1, d2};
    if (!multiply(d1, d2).is_zero())
        throw std::logic_error("check_cylinder: torus evidence complex inconsistent");
    cert.euler = euler_characteristic(torus);
    for (int n = 0; n <= 2; ++n)
        cert.homology.push_back(homology_group(torus, n, coeff));

    bool evidence_ok = cert.euler == 0 && cert.homology[1].free_rank == 2 &&
                       cert.homology[1].torsion.empty() &&
                       detail::descriptor_is_full_group(cert.homology[2]);
    cert.valid = (cert.kronecker_factor == 1) && evidence_ok &&
                 cert.total_dual_boundary.is_zero();
    if (cert.kronecker_factor == 0)
        cert.note = "boundary circles carry distinct labels: " + i_name + " vs " + j_name;
    return cert;
}

/// Stable line-oriented certificate serialization for golden-file tests.
inline std::string serialize_certificate(const MoveCertificate& cert) {
    std::ostringstream out;
    out << "MOVE=" << to_string(cert.kind) << "\n";
    out << "BOUNDARY_MATCH=" << (cert.boundary_labels_match ? "true" : "false") << "\n";
    out << "DUAL_BOUNDARY=" << format_chain(cert.total_dual_boundary, true) << "\n";
    out << "COEFF_INDEX=" << cert.coefficient_index_count << "\n";
    if ((cert.kind == MoveKind::Move22 || cert.kind == MoveKind::Move13) &&
        cert.homology.size() == 3) {
        out << "H0=" << format_group(cert.homology[0]) << " H1=" << format_group(cert.homology[1])
            << " H2=" << format_group(cert.homology[2]) << "\n";
    }
    if (cert.kind == MoveKind::Move13 && !cert.route.empty())
        out << "ROUTE=" << cert.route << "\n";
    if (cert.kind == MoveKind::Cylinder) {
        out << "FACTOR=" << cert.kronecker_factor << "\n";
        out << "TORUS_EULER=" << cert.euler << "\n";
        if (cert.homology.size() == 3)
            out << "TORUS_H1=" << format_group(cert.homology[1])
                << " TORUS_H2=" << format_group(cert.homology[2]) << "\n";
    }
    if (!cert.note.empty())
        out << "NOTE=" << cert.note << "\n";
    out << "VALID=" << (cert.valid ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace pachner
