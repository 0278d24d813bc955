#pragma once

#include "pachner/coeff.hpp"
#include "pachner/simplex.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace pachner {

/// Basis symbol for label-level chains and cochains: an edge label ("i"),
/// a 2-cell name ("[0,1,2]") or a vertex-class name ("v0").  The dual-side
/// star is presentation only; internally both sides share one symbol space.
struct Symbol {
    std::string name;

    Symbol() = default;
    explicit Symbol(std::string n) : name(std::move(n)) {}

    auto operator<=>(const Symbol&) const = default;
};

inline std::string to_string(const Symbol& s) { return s.name; }

/// Formal finite sum of basis elements with exact coefficients.  Homogeneous:
/// every chain carries one degree.  Zero coefficients are never stored.
template <typename Key>
class Chain {
public:
    Chain(CoefficientGroup group, int degree)
        : group_(std::move(group)), degree_(degree) {}

    const CoefficientGroup& group() const { return group_; }
    int degree() const { return degree_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Int(0) : it->second;
    }

    /// Adds c*k, reducing into the group and pruning zeros.
    void add_term(const Key& k, const Int& c) {
        Int v = group_.reduce(terms_[k] + c);
        if (v == 0)
            terms_.erase(k);
        else
            terms_[k] = v;
    }

    friend bool operator==(const Chain& a, const Chain& b) {
        return a.group_ == b.group_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Chain& a, const Chain& b) { return !(a == b); }

private:
    CoefficientGroup group_;
    int degree_;
    std::map<Key, Int> terms_;
};

using SymbolChain = Chain<Symbol>;
using SimplexChain = Chain<OrientedSimplex>;

/// Sum of two chains of equal degree and group.  Mixed degrees are rejected:
/// there are no implicit degree joins.
template <typename Key>
Chain<Key> chain_add(const Chain<Key>& a, const Chain<Key>& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("chain_add: coefficient groups differ");
    if (a.degree() != b.degree())
        throw std::invalid_argument("chain_add: mixed degrees");
    Chain<Key> out = a;
    for (const auto& [k, c] : b.terms())
        out.add_term(k, c);
    return out;
}

template <typename Key>
Chain<Key> chain_scale(const Int& s, const Chain<Key>& a) {
    Chain<Key> out(a.group(), a.degree());
    for (const auto& [k, c] : a.terms())
        out.add_term(k, s * c);
    return out;
}

template <typename Key>
Chain<Key> chain_negate(const Chain<Key>& a) {
    return chain_scale(Int(-1), a);
}

template <typename Key>
Chain<Key> operator+(const Chain<Key>& a, const Chain<Key>& b) { return chain_add(a, b); }

template <typename Key>
Chain<Key> operator-(const Chain<Key>& a, const Chain<Key>& b) {
    return chain_add(a, chain_negate(b));
}

/// A chain holding a single (possibly non-canonical) simplex; the vertex list
/// is normalized and its parity folded into the coefficient.  Degenerate
/// simplices normalize to zero.
inline SimplexChain simplex_chain(const CoefficientGroup& g,
                                  const std::vector<VertexId>& vertices,
                                  const Int& coeff = Int(1)) {
    NormalizedSimplex n = normalize_simplex(vertices);
    SimplexChain out(g, static_cast<int>(vertices.size()) - 1);
    if (n.sign != 0)
        out.add_term(n.simplex, coeff * n.sign);
    return out;
}

/// Simplicial boundary of one canonical simplex: sum of (-1)^i faces.
inline SimplexChain boundary(const CoefficientGroup& g, const OrientedSimplex& s) {
    SimplexChain out(g, s.dimension() - 1);
    if (s.dimension() == 0)
        return out;  // zero chain of degree -1 by convention
    for (int i = 0; i <= s.dimension(); ++i)
        out.add_term(face(s, i), (i % 2 == 0) ? Int(1) : Int(-1));
    return out;
}

/// Linear extension of the boundary to chains.
inline SimplexChain boundary(const SimplexChain& c) {
    SimplexChain out(c.group(), c.degree() - 1);
    for (const auto& [s, coeff] : c.terms()) {
        SimplexChain b = boundary(c.group(), s);
        out = chain_add(out, chain_scale(coeff, b));
    }
    return out;
}

/// Renders a chain as "i-j+k+l" (terms in key order, unit coefficients
/// implicit).  The zero chain renders as "0".  With starred = true every
/// basis symbol gets a trailing '*' (dual-side presentation).
template <typename Key>
std::string format_chain(const Chain<Key>& c, bool starred = false) {
    if (c.is_zero())
        return "0";
    std::string out;
    for (const auto& [k, coeff] : c.terms()) {
        Int a = coeff;
        if (a < 0) {
            out += "-";
            a = -a;
        } else if (!out.empty()) {
            out += "+";
        }
        if (a != 1)
            out += a.str();
        out += to_string(k);
        if (starred)
            out += "*";
    }
    return out;
}

}  // namespace pachner
