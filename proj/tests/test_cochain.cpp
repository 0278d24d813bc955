#include <catch2/catch_amalgamated.hpp>

#include "pachner/complex.hpp"

#include <random>

using namespace pachner;

namespace {

SimplicialComplex tetra_boundary() {
    return SimplicialComplex::from_top_cells({
        OrientedSimplex{{0, 1, 2}},
        OrientedSimplex{{0, 1, 3}},
        OrientedSimplex{{0, 2, 3}},
        OrientedSimplex{{1, 2, 3}},
    });
}

}  // namespace

TEST_CASE("dual basis pairing is the Kronecker delta") {
    auto g = CoefficientGroup::integers();
    SymbolCochain jstar = dual_basis<Symbol>(g, 1, Symbol("j"));
    SymbolChain c(g, 1);
    c.add_term(Symbol("i"), 1);
    c.add_term(Symbol("l"), 1);
    c.add_term(Symbol("k"), 1);
    c.add_term(Symbol("j"), -1);
    REQUIRE(evaluate(jstar, c) == -1);

    SymbolCochain istar = dual_basis<Symbol>(g, 1, Symbol("i"));
    REQUIRE(evaluate(istar, c) == 1);
}

TEST_CASE("degree-mismatched evaluation is zero by design") {
    auto g = CoefficientGroup::integers();
    SymbolCochain estar = dual_basis<Symbol>(g, 1, Symbol("e"));
    SymbolChain two_chain(g, 2);
    two_chain.add_term(Symbol("e"), 7);  // same name, wrong degree
    REQUIRE(evaluate(estar, two_chain) == 0);
}

TEST_CASE("mixed-group evaluation is rejected") {
    SymbolCochain phi = dual_basis<Symbol>(CoefficientGroup::integers(), 1, Symbol("x"));
    SymbolChain c(CoefficientGroup::modular(3), 1);
    c.add_term(Symbol("x"), 1);
    REQUIRE_THROWS_AS(evaluate(phi, c), std::invalid_argument);
}

TEST_CASE("coboundary satisfies the adjunction on the tetrahedron") {
    auto g = CoefficientGroup::integers();
    SimplicialComplex K = tetra_boundary();
    std::mt19937 rng(81);
    auto random_chain = [&](int degree) {
        SimplexChain c(g, degree);
        for (const auto& s : K.cells(degree))
            c.add_term(s, static_cast<int>(rng() % 7) - 3);
        return c;
    };
    auto random_cochain = [&](int degree) {
        SimplexCochain phi(g, degree);
        for (const auto& s : K.cells(degree))
            phi.add_term(s, static_cast<int>(rng() % 7) - 3);
        return phi;
    };
    for (int trial = 0; trial < 50; ++trial)
        for (int degree = 0; degree <= 1; ++degree) {
            SimplexCochain phi = random_cochain(degree);
            SimplexChain c = random_chain(degree + 1);
            REQUIRE(evaluate(coboundary(phi, K), c) == evaluate(phi, boundary(c)));
        }
}

TEST_CASE("coboundary of a coboundary vanishes") {
    auto g = CoefficientGroup::integers();
    SimplicialComplex K = tetra_boundary();
    for (const auto& v : K.cells(0)) {
        SimplexCochain phi = dual_basis<OrientedSimplex>(g, 0, v);
        SimplexCochain ddphi = coboundary(coboundary(phi, K), K);
        REQUIRE(ddphi.is_zero());
    }
}

TEST_CASE("labeled coboundary pairs with the formal boundary") {
    auto g = CoefficientGroup::integers();
    LabeledSurface right;
    right.name = "right";
    LabeledTriangle alpha;
    alpha.vertices = std::array<VertexId, 3>{0, 1, 2};
    alpha.labels = {EdgeLabel{"l"}, EdgeLabel{"n"}, EdgeLabel{"i"}};
    LabeledTriangle beta;
    beta.vertices = std::array<VertexId, 3>{0, 2, 3};
    beta.labels = {EdgeLabel{"k"}, EdgeLabel{"j"}, EdgeLabel{"n"}};
    right.triangles = {alpha, beta};

    // delta(n*) evaluated on alpha+beta equals n* of the total boundary: 0.
    SymbolCochain nstar = dual_basis<Symbol>(g, 1, Symbol("n"));
    SymbolCochain dn = coboundary_labeled(nstar, right);
    SymbolChain cells(g, 2);
    cells.add_term(Symbol(alpha.cell_name()), 1);
    cells.add_term(Symbol(beta.cell_name()), 1);
    REQUIRE(evaluate(dn, cells) == 0);     // -1 from alpha, +1 from beta
    REQUIRE(dn.coefficient(Symbol(alpha.cell_name())) == -1);
    REQUIRE(dn.coefficient(Symbol(beta.cell_name())) == 1);

    SymbolCochain jstar = dual_basis<Symbol>(g, 1, Symbol("j"));
    SymbolCochain dj = coboundary_labeled(jstar, right);
    REQUIRE(evaluate(dj, cells) == -1);
    REQUIRE(evaluate(jstar, formal_total_boundary(g, right)) == -1);
}
