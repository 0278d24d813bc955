#pragma once

#include "pachner/chain.hpp"
#include "pachner/labeled.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pachner {

/// Finite-support cochain: a functional on chains, stored by its values on
/// basis elements.  Same storage as a chain; the evaluation rule is what
/// distinguishes the dual side.
template <typename Key>
class Cochain {
public:
    Cochain(CoefficientGroup group, int degree)
        : group_(std::move(group)), degree_(degree) {}

    const CoefficientGroup& group() const { return group_; }
    int degree() const { return degree_; }
    const std::map<Key, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(const Key& k, const Int& c) {
        Int v = group_.reduce(terms_[k] + c);
        if (v == 0)
            terms_.erase(k);
        else
            terms_[k] = v;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.group_ == b.group_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    CoefficientGroup group_;
    int degree_;
    std::map<Key, Int> terms_;
};

using SymbolCochain = Cochain<Symbol>;
using SimplexCochain = Cochain<OrientedSimplex>;

/// The dual basis element x* (value 1 on x, 0 elsewhere).
template <typename Key>
Cochain<Key> dual_basis(const CoefficientGroup& g, int degree, const Key& k) {
    Cochain<Key> out(g, degree);
    out.add_term(k, Int(1));
    return out;
}

template <typename Key>
Cochain<Key> cochain_add(const Cochain<Key>& a, const Cochain<Key>& b) {
    if (a.group() != b.group())
        throw std::invalid_argument("cochain_add: coefficient groups differ");
    if (a.degree() != b.degree())
        throw std::invalid_argument("cochain_add: mixed degrees");
    Cochain<Key> out = a;
    for (const auto& [k, c] : b.terms())
        out.add_term(k, c);
    return out;
}

template <typename Key>
Cochain<Key> cochain_scale(const Int& s, const Cochain<Key>& a) {
    Cochain<Key> out(a.group(), a.degree());
    for (const auto& [k, c] : a.terms())
        out.add_term(k, s * c);
    return out;
}

/// Bilinear pairing <phi, c>.  Degree-mismatched evaluation is 0 by
/// convention: a p-cochain is only defined on p-chains.
template <typename Key>
Int evaluate(const Cochain<Key>& phi, const Chain<Key>& c) {
    if (phi.group() != c.group())
        throw std::invalid_argument("evaluate: coefficient groups differ");
    if (phi.degree() != c.degree())
        return Int(0);
    Int acc = 0;
    for (const auto& [k, v] : c.terms())
        acc += phi.coefficient(k) * v;
    return phi.group().reduce(acc);
}

}  // namespace pachner
