#pragma once

#include "pachner/complex.hpp"
#include "pachner/smith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pachner {

/// Finitely generated module over the coefficient group, in invariant-factor
/// form.  Over Z, free_rank counts Z summands; over Z/m it counts full Z/m
/// summands, and torsion lists the proper cyclic summands Z/d with d | m.
struct GroupDescriptor {
    CoefficientGroup coeff = CoefficientGroup::integers();
    long free_rank = 0;
    std::vector<Int> torsion;  // entries > 1, divisibility chain

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const GroupDescriptor&) const = default;
};

inline std::string format_group(const GroupDescriptor& g) {
    if (g.is_zero())
        return "0";
    std::string free_name = g.coeff.name();  // "Z" or "Z/m"
    std::vector<std::string> parts;
    if (g.free_rank == 1)
        parts.push_back(free_name);
    else if (g.free_rank > 1) {
        if (g.coeff.is_modular())
            parts.push_back("(" + free_name + ")^" + std::to_string(g.free_rank));
        else
            parts.push_back(free_name + "^" + std::to_string(g.free_rank));
    }
    for (const auto& d : g.torsion)
        parts.push_back("Z/" + d.str());
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += "+";
        out += parts[i];
    }
    return out;
}

/// Invariant-factor canonicalization of a multiset of cyclic orders: the
/// Smith form of the diagonal matrix they span.  Drops units.
inline std::vector<Int> canonical_invariant_factors(const std::vector<Int>& orders) {
    if (orders.empty())
        return {};
    IntegerMatrix diag(static_cast<int>(orders.size()), static_cast<int>(orders.size()));
    for (int i = 0; i < static_cast<int>(orders.size()); ++i)
        diag.at(i, i) = orders[i];
    std::vector<Int> div = smith_normal_form(diag).divisors();
    std::vector<Int> out;
    for (const auto& d : div)
        if (d > 1)
            out.push_back(d);
    return out;
}

/// Chain-complex presentation: cell counts per degree and the integral
/// boundary matrices d_n : C_n -> C_{n-1} for 1 <= n <= top degree.
struct ChainComplexData {
    std::vector<int> dims;
    std::vector<IntegerMatrix> boundaries;  // boundaries[n] is d_n; index 0 unused

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    int dim(int n) const {
        if (n < 0 || n > top_degree())
            return 0;
        return dims[n];
    }

    IntegerMatrix boundary(int n) const {
        if (n >= 1 && n <= top_degree())
            return boundaries[n];
        if (n == top_degree() + 1)
            return IntegerMatrix(dim(top_degree()), 0);
        if (n <= 0)
            return IntegerMatrix(0, dim(0));
        return IntegerMatrix(0, 0);
    }
};

inline ChainComplexData complex_data(const SimplicialComplex& c) {
    ChainComplexData data;
    int top = c.dim() < 0 ? 0 : c.dim();
    for (int n = 0; n <= top; ++n)
        data.dims.push_back(static_cast<int>(c.cells(n).size()));
    data.boundaries.resize(top + 1, IntegerMatrix(0, 0));
    for (int n = 1; n <= top; ++n)
        data.boundaries[n] = boundary_matrix(c, n);
    return data;
}

inline ChainComplexData complex_data(const GluedComplex& g) {
    ChainComplexData data;
    data.dims = {static_cast<int>(g.vertex_classes.size()), static_cast<int>(g.edges.size()),
                 static_cast<int>(g.faces.size())};
    data.boundaries = {IntegerMatrix(0, 0), g.d1, g.d2};
    return data;
}

/// (nullity, rank) of an integer matrix, i.e. dim ker and dim im over Q --
/// for an exact boundary check these agree with the Z-ranks.
inline std::pair<int, int> kernel_image_ranks(const IntegerMatrix& m) {
    int r = smith_normal_form(m).rank();
    return {m.cols() - r, r};
}

inline long euler_characteristic(const ChainComplexData& data) {
    long chi = 0;
    for (int n = 0; n <= data.top_degree(); ++n)
        chi += (n % 2 == 0) ? data.dims[n] : -data.dims[n];
    return chi;
}

/// H_n of the complex with the given coefficients.  Integral answers read off
/// the Smith forms of d_n and d_{n+1}; modular answers follow from the
/// integral ones by universal coefficients:
///   H_n(Z/m) = H_n(Z) (x) Z/m  +  Tor(H_{n-1}(Z), Z/m).
inline GroupDescriptor homology_group(const ChainComplexData& data, int n,
                                      const CoefficientGroup& coeff) {
    GroupDescriptor out;
    out.coeff = coeff;
    if (n < 0 || n > data.top_degree())
        return out;

    SmithForm below = smith_normal_form(data.boundary(n));      // d_n
    SmithForm above = smith_normal_form(data.boundary(n + 1));  // d_{n+1}
    long free_rank = data.dim(n) - below.rank() - above.rank();
    std::vector<Int> torsion;
    for (const auto& d : above.divisors())
        if (d > 1)
            torsion.push_back(d);

    if (!coeff.is_modular()) {
        out.free_rank = free_rank;
        out.torsion = canonical_invariant_factors(torsion);
        return out;
    }

    Int m = coeff.modulus();
    long full = free_rank;  // Z (x) Z/m = Z/m
    std::vector<Int> proper;
    auto add_cyclic = [&](const Int& d) {
        Int g = boost::multiprecision::gcd(d, m);
        if (g == m)
            ++full;
        else if (g > 1)
            proper.push_back(g);
    };
    for (const auto& d : torsion)
        add_cyclic(d);  // Z/d (x) Z/m = Z/gcd(d, m)
    for (const auto& d : below.divisors())
        if (d > 1)
            add_cyclic(d);  // Tor(Z/d, Z/m) = Z/gcd(d, m)

    out.free_rank = full;
    out.torsion = canonical_invariant_factors(proper);
    return out;
}

inline GroupDescriptor homology_group(const ChainComplexData& data, int n) {
    return homology_group(data, n, CoefficientGroup::integers());
}

}  // namespace pachner
