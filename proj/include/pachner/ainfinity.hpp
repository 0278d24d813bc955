#pragma once

#include "pachner/complex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

/// Standard: the Stasheff relations with the textbook (-1)^{r+st} signs.
/// Paper: additionally negates the m_3 (1 x ... m_1 ... x 1) block in the
/// n = 3 relation.  The n = 4 relation is checked in its literal two-sided
/// arrangement under both conventions.
enum class SignConvention { Standard, Paper };

inline std::string to_string(SignConvention c) {
    return c == SignConvention::Paper ? "paper" : "standard";
}

struct BasisElement {
    Symbol name;
    int degree = 0;
    auto operator<=>(const BasisElement&) const = default;
};

/// Graded basis of C*_0 + C*_1 + C*_2: vertex classes, edge labels, and
/// 2-cell names, with unique names across degrees.
struct GradedBasis {
    std::vector<BasisElement> elements;

    void add(const Symbol& name, int degree) {
        if (index_.count(name))
            throw std::invalid_argument("graded basis: duplicate name '" + name.name + "'");
        index_[name] = degree;
        elements.push_back({name, degree});
    }
    /// Adds the name unless present; an existing entry must carry the same
    /// degree.
    void ensure(const Symbol& name, int degree) {
        auto it = index_.find(name);
        if (it == index_.end())
            add(name, degree);
        else if (it->second != degree)
            throw std::invalid_argument("graded basis: '" + name.name +
                                        "' redeclared in a different degree");
    }
    bool contains(const Symbol& name) const { return index_.count(name) > 0; }
    int degree_of(const Symbol& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw std::invalid_argument("graded basis: unknown name '" + name.name + "'");
        return it->second;
    }

private:
    std::map<Symbol, int> index_;
};

/// Sparse m_n table: finite map from name tuples to signed basis
/// combinations; tuples without an entry act as zero.  sign_degree feeds the
/// Koszul rule (1 for the differential m_1, 0 for the table maps, whose
/// entries the source computations treat as sign-neutral).
struct GradedMapTable {
    int arity = 1;
    int sign_degree = 0;
    std::map<std::vector<Symbol>, std::map<Symbol, Int>> entries;

    int nominal_degree() const { return 2 - arity; }

    const std::map<Symbol, Int>* lookup(const std::vector<Symbol>& tuple) const {
        auto it = entries.find(tuple);
        return it == entries.end() ? nullptr : &it->second;
    }

    /// Sets tuple -> {out: coeff}; re-setting requires the identical value.
    void set_entry(const std::vector<Symbol>& tuple, const Symbol& out, const Int& coeff) {
        std::map<Symbol, Int> value{{out, coeff}};
        auto it = entries.find(tuple);
        if (it == entries.end()) {
            entries.emplace(tuple, std::move(value));
            return;
        }
        if (it->second != value) {
            std::string t;
            for (const auto& x : tuple)
                t += (t.empty() ? "" : ",") + x.name + "*";
            throw std::invalid_argument("m" + std::to_string(arity) + " table conflict at (" +
                                        t + ")");
        }
    }
};

/// Formal square cell (corner vertices, perimeter read from the document's
/// triangles) feeding m_3 and the n <= 3 probes.
struct SquareCell {
    std::array<VertexId, 4> corners{};

    friend bool operator==(const SquareCell&, const SquareCell&) = default;
};

/// Formal pentagon cell: corners plus the five diagonal labels in the order
/// (c0,c2), (c1,c3), (c2,c4), (c0,c3), (c1,c4).
struct PentagonCell {
    std::array<VertexId, 5> corners{};
    std::array<std::string, 5> diagonals{};

    friend bool operator==(const PentagonCell&, const PentagonCell&) = default;
};

struct AInfinityData {
    CoefficientGroup group = CoefficientGroup::integers();
    SignConvention convention = SignConvention::Standard;
    GradedBasis basis;
    std::map<int, GradedMapTable> maps;            // arity -> table
    std::map<Symbol, SymbolChain> cell_boundary;   // 2-cell name -> label chain
    std::map<Symbol, SymbolChain> label_boundary;  // label -> vertex-class chain

    const GradedMapTable* table(int arity) const {
        auto it = maps.find(arity);
        return it == maps.end() ? nullptr : &it->second;
    }

    /// Formal boundary of a 2-cell combination, one degree down.
    SymbolChain boundary_of_cells(const SymbolChain& c) const {
        SymbolChain out(group, 1);
        for (const auto& [cell, coeff] : c.terms()) {
            auto it = cell_boundary.find(cell);
            if (it == cell_boundary.end())
                throw std::invalid_argument("unknown 2-cell '" + cell.name + "'");
            for (const auto& [label, lc] : it->second.terms())
                out.add_term(label, lc * coeff);
        }
        return out;
    }

    /// Vertex-level boundary of a label combination.
    SymbolChain boundary_of_labels(const SymbolChain& c) const {
        SymbolChain out(group, 0);
        for (const auto& [label, coeff] : c.terms()) {
            auto it = label_boundary.find(label);
            if (it == label_boundary.end())
                throw std::invalid_argument("unknown label '" + label.name + "'");
            for (const auto& [v, vc] : it->second.terms())
                out.add_term(v, vc * coeff);
        }
        return out;
    }
};

/// Homogeneous tensor with a formal integer coefficient; degrees ride along
/// for Koszul bookkeeping.
struct TensorElement {
    std::vector<BasisElement> factors;
    Int coeff = 1;
};

/// One slot of a tensor-product map: either an identity (table == nullptr)
/// or a graded map applied to `arity` consecutive factors; `degree` is the
/// slot's Koszul parity source.
struct KoszulSlot {
    int arity = 1;
    int degree = 0;
    const GradedMapTable* table = nullptr;
};

inline KoszulSlot identity_slot() { return {1, 0, nullptr}; }

/// Iterated application (f_1 x ... x f_k)(x_1 x ... x x_N) with the sign
/// (-1)^{|f| * (degrees to the left)} accumulated per slot, left to right.
/// Table slots expand to their (signed) entry combinations; missing entries
/// annihilate the term.
inline std::vector<TensorElement> koszul_apply(const std::vector<KoszulSlot>& slots,
                                               const TensorElement& input,
                                               const GradedBasis& basis) {
    int need = 0;
    for (const auto& s : slots)
        need += s.arity;
    if (need != static_cast<int>(input.factors.size()))
        throw std::invalid_argument("koszul_apply: slot arities do not match tensor length");

    std::vector<TensorElement> acc{TensorElement{{}, input.coeff}};
    int pos = 0;
    int degrees_left = 0;
    for (const auto& slot : slots) {
        std::vector<BasisElement> args(input.factors.begin() + pos,
                                       input.factors.begin() + pos + slot.arity);
        int arg_degrees = 0;
        for (const auto& a : args)
            arg_degrees += a.degree;

        Int sign = (slot.degree * degrees_left) % 2 != 0 ? -1 : 1;
        std::vector<TensorElement> next;
        if (!slot.table) {
            if (slot.arity != 1)
                throw std::invalid_argument("koszul_apply: identity slots have arity 1");
            for (auto t : acc) {
                t.factors.push_back(args[0]);
                t.coeff *= sign;
                next.push_back(std::move(t));
            }
        } else {
            std::vector<Symbol> names;
            for (const auto& a : args)
                names.push_back(a.name);
            const auto* combo = slot.table->lookup(names);
            if (combo) {
                for (const auto& [out, c] : *combo)
                    for (auto t : acc) {
                        t.factors.push_back({out, basis.degree_of(out)});
                        t.coeff *= sign * c;
                        next.push_back(std::move(t));
                    }
            }
            // No entry: the whole branch evaluates to zero.
        }
        acc = std::move(next);
        pos += slot.arity;
        degrees_left += arg_degrees;
    }
    return acc;
}

/// Merges like terms of a koszul_apply result, dropping zeros.
inline std::map<std::vector<BasisElement>, Int> collect_tensors(
    const std::vector<TensorElement>& terms) {
    std::map<std::vector<BasisElement>, Int> out;
    for (const auto& t : terms) {
        auto& c = out[t.factors];
        c += t.coeff;
        if (c == 0)
            out.erase(t.factors);
    }
    return out;
}

namespace detail {

/// Document-wide map from sorted vertex pairs to edge labels; two different
/// labels on one pair is a modeling error.
inline std::map<std::pair<VertexId, VertexId>, std::string> document_edge_map(
    const std::vector<LabeledSurface>& surfaces) {
    std::map<std::pair<VertexId, VertexId>, std::string> out;
    for (const auto& s : surfaces)
        for (const auto& t : s.triangles) {
            if (!t.vertices)
                continue;
            for (int i = 0; i < 3; ++i) {
                auto p = t.slot_pair(i);
                if (p.second < p.first)
                    std::swap(p.first, p.second);
                auto it = out.find(p);
                if (it == out.end())
                    out[p] = t.labels[i].name;
                else if (it->second != t.labels[i].name)
                    throw std::invalid_argument(
                        "edge [" + std::to_string(p.first) + "," + std::to_string(p.second) +
                        "] carries two labels: " + it->second + " and " + t.labels[i].name);
            }
        }
    return out;
}

inline const LabeledTriangle* find_triangle(const std::vector<LabeledSurface>& surfaces,
                                            const std::array<VertexId, 3>& triple) {
    for (const auto& s : surfaces)
        for (const auto& t : s.triangles)
            if (t.vertices && *t.vertices == triple)
                return &t;
    return nullptr;
}

/// Reverse-perimeter fusion entry of a polygon (c_0 .. c_k): inputs are the
/// sides (c_{k-1}c_k), ..., (c_0c_1), the output is the side (c_0c_k).
/// Returns false if some needed edge has no label.
template <typename EdgeLookup>
inline bool polygon_entry(const EdgeLookup& edge, const std::vector<int>& corners,
                          std::vector<std::string>* inputs, std::string* output) {
    int k = static_cast<int>(corners.size()) - 1;
    inputs->clear();
    for (int i = k - 1; i >= 0; --i) {
        auto lbl = edge(corners[i], corners[i + 1]);
        if (!lbl)
            return false;
        inputs->push_back(*lbl);
    }
    auto out = edge(corners[0], corners[k]);
    if (!out)
        return false;
    *output = *out;
    return true;
}

}  // namespace detail

/// Builds the A-infinity data of a document: basis and m_1 from the glued
/// union of the surfaces, m_2 from every triangle T(a,b,c) as a* x c* -> b*,
/// m_3 from squares, m_4 from pentagons (reverse-perimeter fusion reading,
/// with each polygon also contributing the m_2 entries of all its
/// triangulation states).  Conflicting derived entries are rejected.
inline AInfinityData build_from_surface(const std::vector<LabeledSurface>& surfaces,
                                        const std::vector<SquareCell>& squares,
                                        const std::vector<PentagonCell>& pentagons,
                                        const CoefficientGroup& group,
                                        SignConvention convention) {
    AInfinityData data;
    data.group = group;
    data.convention = convention;

    for (const auto& s : surfaces) {
        validate_surface(s);
        for (const auto& t : s.triangles)
            if (!t.vertices)
                throw std::invalid_argument("a-infinity data: triangle lacks vertices");
    }

    GluedComplex glued = build_glued_complex(surfaces);
    detail::VertexUnion uf;
    for (const auto& s : surfaces)
        for (const auto& [a, b] : s.vertex_glues)
            uf.unite(a, b);

    for (VertexId v : glued.vertex_classes)
        data.basis.add(Symbol("v" + std::to_string(v)), 0);
    for (const auto& e : glued.edges)
        data.basis.add(e, 1);
    for (const auto& s : surfaces)
        for (const auto& t : s.triangles) {
            Symbol cell(t.cell_name());
            data.basis.add(cell, 2);
            data.cell_boundary.emplace(cell,
                                       labeled_boundary(CoefficientGroup::integers(), t));
        }
    for (const auto& e : glued.edges) {
        auto [tail, head] = glued.edge_ends.at(e);
        SymbolChain b(CoefficientGroup::integers(), 0);
        if (tail != head) {
            b.add_term(Symbol("v" + std::to_string(head)), 1);
            b.add_term(Symbol("v" + std::to_string(tail)), -1);
        }
        data.label_boundary.emplace(e, b);
    }

    // m_1 = delta, tabulated through the adjoint of the two boundary maps.
    GradedMapTable m1;
    m1.arity = 1;
    m1.sign_degree = 1;
    for (const auto& [label, b] : data.label_boundary)
        for (const auto& [v, coeff] : b.terms())
            m1.entries[{v}][label] += coeff;
    for (const auto& [cell, b] : data.cell_boundary)
        for (const auto& [label, coeff] : b.terms())
            m1.entries[{label}][cell] += coeff;
    for (auto it = m1.entries.begin(); it != m1.entries.end();) {
        for (auto jt = it->second.begin(); jt != it->second.end();)
            jt = (jt->second == 0) ? it->second.erase(jt) : std::next(jt);
        it = it->second.empty() ? m1.entries.erase(it) : std::next(it);
    }
    data.maps[1] = std::move(m1);

    auto& m2 = data.maps[2];
    m2.arity = 2;
    auto& m3 = data.maps[3];
    m3.arity = 3;

    // Declared triangles: T(a,b,c) fuses a* x c* -> b*.
    for (const auto& s : surfaces)
        for (const auto& t : s.triangles)
            m2.set_entry({Symbol(t.labels[0].name), Symbol(t.labels[2].name)},
                         Symbol(t.labels[1].name), 1);

    auto doc_edges = detail::document_edge_map(surfaces);

    for (const auto& sq : squares) {
        auto edge = [&](int i, int j) -> std::optional<std::string> {
            auto p = std::minmax(sq.corners[i], sq.corners[j]);
            auto it = doc_edges.find({p.first, p.second});
            if (it == doc_edges.end())
                return std::nullopt;
            return it->second;
        };
        std::vector<std::string> in;
        std::string out;
        if (!detail::polygon_entry(edge, {0, 1, 2, 3}, &in, &out))
            throw std::invalid_argument("square cell: a perimeter edge has no label");
        m3.set_entry({Symbol(in[0]), Symbol(in[1]), Symbol(in[2])}, Symbol(out), 1);
        // Triangulation-state triangles (every corner triple) refine m_2
        // when both diagonals are labeled somewhere in the document.
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    auto jk = edge(j, k), ij = edge(i, j), ik = edge(i, k);
                    if (jk && ij && ik)
                        m2.set_entry({Symbol(*jk), Symbol(*ij)}, Symbol(*ik), 1);
                }
    }

    for (const auto& pc : pentagons) {
        // Diagonal labels come from the declaration; sides from the
        // document.  Declared diagonals must agree with any document edge.
        const std::array<std::pair<int, int>, 5> diag_pairs = {
            {{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}};
        std::map<std::pair<VertexId, VertexId>, std::string> local;
        for (int d = 0; d < 5; ++d) {
            auto p = std::minmax(pc.corners[diag_pairs[d].first],
                                 pc.corners[diag_pairs[d].second]);
            std::pair<VertexId, VertexId> key{p.first, p.second};
            auto it = doc_edges.find(key);
            if (it != doc_edges.end() && it->second != pc.diagonals[d])
                throw std::invalid_argument("pentagon diagonal '" + pc.diagonals[d] +
                                            "' disagrees with the document edge '" +
                                            it->second + "'");
            local[key] = pc.diagonals[d];
            // Diagonals of undeclared states are still degree-1 elements.
            data.basis.ensure(Symbol(pc.diagonals[d]), 1);
        }
        auto edge = [&](int i, int j) -> std::optional<std::string> {
            auto p = std::minmax(pc.corners[i], pc.corners[j]);
            std::pair<VertexId, VertexId> key{p.first, p.second};
            auto it = local.find(key);
            if (it != local.end())
                return it->second;
            auto dt = doc_edges.find(key);
            if (dt == doc_edges.end())
                return std::nullopt;
            return dt->second;
        };
        std::vector<std::string> in;
        std::string out;
        if (!detail::polygon_entry(edge, {0, 1, 2, 3, 4}, &in, &out))
            throw std::invalid_argument("pentagon cell: a perimeter edge has no label");
        auto& m4 = data.maps[4];
        m4.arity = 4;
        m4.set_entry({Symbol(in[0]), Symbol(in[1]), Symbol(in[2]), Symbol(in[3])}, Symbol(out),
                     1);
        // Sub-squares give m_3; state triangles (every corner triple) m_2.
        for (int w = 0; w < 5; ++w)
            for (int x = w + 1; x < 5; ++x)
                for (int y = x + 1; y < 5; ++y) {
                    for (int z = y + 1; z < 5; ++z) {
                        if (!detail::polygon_entry(edge, {w, x, y, z}, &in, &out))
                            throw std::invalid_argument(
                                "pentagon cell: a sub-square edge has no label");
                        m3.set_entry({Symbol(in[0]), Symbol(in[1]), Symbol(in[2])}, Symbol(out),
                                     1);
                    }
                    auto xy = edge(w, x), yz = edge(x, y), xz = edge(w, y);
                    if (xy && yz && xz)
                        m2.set_entry({Symbol(*yz), Symbol(*xy)}, Symbol(*xz), 1);
                }
    }

    if (data.maps.count(3) && data.maps[3].entries.empty())
        data.maps.erase(3);
    return data;
}

inline AInfinityData build_from_surface(const LabeledSurface& s,
                                        const std::vector<SquareCell>& squares = {},
                                        const std::vector<PentagonCell>& pentagons = {},
                                        const CoefficientGroup& group =
                                            CoefficientGroup::integers(),
                                        SignConvention convention = SignConvention::Standard) {
    return build_from_surface(std::vector<LabeledSurface>{s}, squares, pentagons, group,
                              convention);
}

/// Applies the arity-n table to a name tuple; missing tables or entries give
/// the empty combination.
inline std::map<Symbol, Int> apply_table(const AInfinityData& data, int arity,
                                         const std::vector<Symbol>& tuple) {
    const GradedMapTable* t = data.table(arity);
    if (!t)
        return {};
    const auto* combo = t->lookup(tuple);
    return combo ? *combo : std::map<Symbol, Int>{};
}

namespace detail {

inline Int pair_names(const CoefficientGroup& g, const std::map<Symbol, Int>& phi,
                      const SymbolChain& c) {
    Int v = 0;
    for (const auto& [name, coeff] : phi)
        v += coeff * c.coefficient(name);
    return g.reduce(v);
}

inline std::map<Symbol, Int>& accumulate(std::map<Symbol, Int>& into,
                                         const std::map<Symbol, Int>& from, const Int& scale) {
    for (const auto& [name, coeff] : from) {
        auto& c = into[name];
        c += coeff * scale;
        if (c == 0)
            into.erase(name);
    }
    return into;
}

}  // namespace detail

/// The two sides of the n-th Stasheff relation in the source arrangement,
/// applied to `input` and evaluated on `test_chain`.
///
///   n=1:  m1 m1 (x) (c)                    vs  0
///   n=2:  m1 m2 (X) (c)                    vs  m2 (m1 x 1 + 1 x m1)(X) (c)
///   n=3:  m2 (1 x m2 - m2 x 1)(X) (c)      vs  [m1 m3 -/+ m3 (sum 1..m1..1)](X) (c)
///         (minus under Paper, plus under Standard)
///   n=4:  [m2 (1 x m3 + m3 x 1)
///          + m3 (-1x1xm2 + 1xm2x1 - m2x1x1)](X) (c)
///                                          vs  [m1 m4 - m4 (sum 1..m1..1)](X) (c)
///
/// Inner m_1 blocks act through the coboundary adjunction: applied to a
/// table image they slide onto the test chain as its formal boundary.
inline std::pair<Int, Int> relation_sides(const AInfinityData& data, int n,
                                          const TensorElement& input,
                                          const SymbolChain& test_chain) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("relation_sides: arity must be 1..4");
    if (static_cast<int>(input.factors.size()) != n)
        throw std::invalid_argument("relation_sides: input tensor length must equal arity");

    const CoefficientGroup& g = data.group;
    std::vector<Symbol> names;
    for (const auto& f : input.factors)
        names.push_back(f.name);

    SymbolChain dc = data.boundary_of_cells(test_chain);

    auto scaled = [&](Int v) { return g.reduce(v * input.coeff); };

    if (n == 1) {
        // delta delta x evaluated on c: by adjunction this pairs x against
        // the (identically zero) double boundary of c.
        SymbolChain ddc = data.boundary_of_labels(dc);
        Int left = detail::pair_names(g, {{names[0], 1}}, ddc);
        return {scaled(left), 0};
    }

    if (n == 2) {
        Int v = detail::pair_names(g, apply_table(data, 2, names), dc);
        return {scaled(v), scaled(v)};  // outer-m1 adjunction and the slide agree
    }

    if (n == 3) {
        // Left: associativity defect through the m2 table, paired against a
        // 2-chain (a degree-1 cochain, so the pairing is 0 by degrees; the
        // combination is still formed literally).
        std::map<Symbol, Int> combo;
        detail::accumulate(combo, apply_table(data, 2, {names[0], names[1]}), 0);
        for (const auto& [y, cy] : apply_table(data, 2, {names[1], names[2]}))
            detail::accumulate(combo, apply_table(data, 2, {names[0], y}), cy);
        for (const auto& [y, cy] : apply_table(data, 2, {names[0], names[1]}))
            detail::accumulate(combo, apply_table(data, 2, {y, names[2]}), -cy);
        Int left = detail::pair_names(g, combo, test_chain);

        Int v = detail::pair_names(g, apply_table(data, 3, names), dc);
        Int right = (data.convention == SignConvention::Paper) ? g.reduce(v - v)
                                                               : g.reduce(v + v);
        return {scaled(left), scaled(right)};
    }

    // n == 4: the literal two-sided arrangement, same under both conventions.
    std::map<Symbol, Int> combo;
    for (const auto& [y, cy] : apply_table(data, 3, {names[1], names[2], names[3]}))
        detail::accumulate(combo, apply_table(data, 2, {names[0], y}), cy);
    for (const auto& [y, cy] : apply_table(data, 3, {names[0], names[1], names[2]}))
        detail::accumulate(combo, apply_table(data, 2, {y, names[3]}), cy);
    for (const auto& [y, cy] : apply_table(data, 2, {names[2], names[3]}))
        detail::accumulate(combo, apply_table(data, 3, {names[0], names[1], y}), -cy);
    for (const auto& [y, cy] : apply_table(data, 2, {names[1], names[2]}))
        detail::accumulate(combo, apply_table(data, 3, {names[0], y, names[3]}), cy);
    for (const auto& [y, cy] : apply_table(data, 2, {names[0], names[1]}))
        detail::accumulate(combo, apply_table(data, 3, {y, names[2], names[3]}), -cy);
    Int left = detail::pair_names(g, combo, test_chain);

    Int v = detail::pair_names(g, apply_table(data, 4, names), dc);
    Int right = g.reduce(v - v);
    return {scaled(left), scaled(right)};
}

/// left - right of relation_sides, reduced into the coefficient group;
/// zero means the relation holds on this probe.
inline Int stasheff_residual(const AInfinityData& data, int n, const TensorElement& input,
                             const SymbolChain& test_chain) {
    auto [left, right] = relation_sides(data, n, input, test_chain);
    return data.group.reduce(left - right);
}

/// Checks m_1 m_1 = 0 at the table level: applying the m_1 table twice
/// annihilates every basis element.
inline bool m1_squared_is_zero(const AInfinityData& data) {
    const GradedMapTable* m1 = data.table(1);
    if (!m1)
        return true;
    for (const auto& el : data.basis.elements) {
        std::map<Symbol, Int> once;
        if (const auto* c = m1->lookup({el.name}))
            once = *c;
        std::map<Symbol, Int> twice;
        for (const auto& [mid, coeff] : once)
            if (const auto* c = m1->lookup({mid}))
                detail::accumulate(twice, *c, coeff);
        if (!twice.empty())
            return false;
    }
    return true;
}

/// One warning per table entry whose output degree differs from
/// (sum of input degrees) + (2 - n).  Warnings never abort a check.
inline std::vector<std::string> degree_audit(const AInfinityData& data) {
    std::vector<std::string> out;
    for (const auto& [arity, table] : data.maps)
        for (const auto& [tuple, combo] : table.entries) {
            int in_degree = 0;
            std::string shown;
            for (const auto& x : tuple) {
                in_degree += data.basis.degree_of(x);
                shown += (shown.empty() ? "" : ",") + x.name + "*";
            }
            int expected = in_degree + table.nominal_degree();
            for (const auto& [y, coeff] : combo) {
                int actual = data.basis.degree_of(y);
                if (actual != expected)
                    out.push_back("m" + std::to_string(arity) + "(" + shown + ") -> " + y.name +
                                  "*: degree " + std::to_string(actual) + ", expected " +
                                  std::to_string(expected));
            }
        }
    return out;
}

/// A named probe: relation arity, input tensor, and test chain drawn from
/// the document's polygons.
struct ProbeSpec {
    int n = 2;
    TensorElement input;
    SymbolChain test_chain{CoefficientGroup::integers(), 2};
    std::string description;
};

/// Resolves probe n1..n4 against the document: n1-n3 use the first square
/// (alpha on (c0,c1,c2), beta on (c0,c2,c3)); n4 uses the first pentagon's
/// corner fan (c2,c3,c4), (c1,c2,c4), (c0,c1,c4).
inline ProbeSpec resolve_probe(const AInfinityData& data,
                               const std::vector<LabeledSurface>& surfaces,
                               const std::vector<SquareCell>& squares,
                               const std::vector<PentagonCell>& pentagons, int n) {
    ProbeSpec probe;
    probe.n = n;
    probe.test_chain = SymbolChain(data.group, 2);
    auto doc_edges = detail::document_edge_map(surfaces);
    auto edge_label = [&](VertexId u, VertexId v) {
        auto p = std::minmax(u, v);
        auto it = doc_edges.find({p.first, p.second});
        if (it == doc_edges.end())
            throw std::invalid_argument("probe: edge [" + std::to_string(p.first) + "," +
                                        std::to_string(p.second) + "] has no label");
        return it->second;
    };
    auto factor = [&](const std::string& name) {
        Symbol s(name);
        return BasisElement{s, data.basis.degree_of(s)};
    };

    if (n >= 1 && n <= 3) {
        if (squares.empty())
            throw std::invalid_argument("probe n" + std::to_string(n) +
                                        " needs a square declaration");
        const auto& c = squares[0].corners;
        const LabeledTriangle* alpha = detail::find_triangle(surfaces, {c[0], c[1], c[2]});
        if (!alpha)
            throw std::invalid_argument("probe: the square's (c0,c1,c2) triangle is not "
                                        "declared");
        probe.test_chain.add_term(Symbol(alpha->cell_name()), 1);
        if (n == 1) {
            probe.input.factors = {factor(alpha->labels[1].name)};
            probe.description = alpha->labels[1].name + "* on " + alpha->cell_name();
        } else if (n == 2) {
            probe.input.factors = {factor(alpha->labels[0].name),
                                   factor(alpha->labels[2].name)};
            probe.description = alpha->labels[0].name + "*(x)" + alpha->labels[2].name + "* on " +
                                alpha->cell_name();
        } else {
            const LabeledTriangle* beta = detail::find_triangle(surfaces, {c[0], c[2], c[3]});
            if (!beta)
                throw std::invalid_argument("probe: the square's (c0,c2,c3) triangle is not "
                                            "declared");
            probe.test_chain.add_term(Symbol(beta->cell_name()), 1);
            std::array<std::string, 3> in{edge_label(c[2], c[3]), edge_label(c[1], c[2]),
                                          edge_label(c[0], c[1])};
            probe.input.factors = {factor(in[0]), factor(in[1]), factor(in[2])};
            probe.description = in[0] + "*(x)" + in[1] + "*(x)" + in[2] + "* on " +
                                alpha->cell_name() + "+" + beta->cell_name();
        }
        return probe;
    }
    if (n == 4) {
        if (pentagons.empty())
            throw std::invalid_argument("probe n4 needs a pentagon declaration");
        const auto& c = pentagons[0].corners;
        const std::array<std::array<VertexId, 3>, 3> fan = {
            {{c[2], c[3], c[4]}, {c[1], c[2], c[4]}, {c[0], c[1], c[4]}}};
        std::string cells;
        for (const auto& triple : fan) {
            const LabeledTriangle* t = detail::find_triangle(surfaces, triple);
            if (!t)
                throw std::invalid_argument("probe: pentagon fan triangle not declared");
            probe.test_chain.add_term(Symbol(t->cell_name()), 1);
            cells += (cells.empty() ? "" : "+") + t->cell_name();
        }
        std::array<std::string, 4> in{edge_label(c[3], c[4]), edge_label(c[2], c[3]),
                                      edge_label(c[1], c[2]), edge_label(c[0], c[1])};
        probe.input.factors = {factor(in[0]), factor(in[1]), factor(in[2]), factor(in[3])};
        probe.description =
            in[0] + "*(x)" + in[1] + "*(x)" + in[2] + "*(x)" + in[3] + "* on " + cells;
        return probe;
    }
    throw std::invalid_argument("probe id must be n1..n4");
}

}  // namespace pachner
