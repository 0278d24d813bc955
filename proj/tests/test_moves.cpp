#include <catch2/catch_amalgamated.hpp>

#include "pachner/moves.hpp"
#include "pachner/parse.hpp"

#include <fstream>
#include <sstream>

using namespace pachner;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const std::string kData = PACHNER_DATA_DIR;

LabeledTriangle tri(std::array<VertexId, 3> v, const char* a, const char* b, const char* c,
                    Orientation o = Orientation::Plus) {
    LabeledTriangle t;
    t.vertices = v;
    t.labels = {EdgeLabel{a}, EdgeLabel{b}, EdgeLabel{c}};
    t.orient = o;
    return t;
}

SymbolChain chain_of(const CoefficientGroup& g, int degree,
                     std::initializer_list<std::pair<const char*, int>> terms) {
    SymbolChain c(g, degree);
    for (const auto& [name, coeff] : terms)
        c.add_term(Symbol(name), coeff);
    return c;
}

}  // namespace

TEST_CASE("2-2 move certificate on the flipped square") {
    ComplexDocument doc = parse_document(read_file(kData + "/square22.cplx"));
    REQUIRE(doc.surfaces.size() == 2);
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_move_22(doc.surfaces[0], doc.surfaces[1], z);
    REQUIRE(cert.valid);
    REQUIRE(cert.boundary_labels_match);
    REQUIRE(cert.total_dual_boundary.is_zero());
    REQUIRE(cert.coefficient_index_count == 6);
    REQUIRE(cert.homology.size() == 3);
    REQUIRE(format_group(cert.homology[0]) == "Z");
    REQUIRE(format_group(cert.homology[1]) == "0");
    REQUIRE(format_group(cert.homology[2]) == "Z");

    std::string report = serialize_certificate(cert);
    REQUIRE(report.find("MOVE=22\n") != std::string::npos);
    REQUIRE(report.find("COEFF_INDEX=6\n") != std::string::npos);
    REQUIRE(report.find("VALID=true\n") != std::string::npos);
}

TEST_CASE("2-2 move with swapped boundary labels is rejected") {
    ComplexDocument doc = parse_document(read_file(kData + "/square22_mismatch.cplx"));
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_move_22(doc.surfaces[0], doc.surfaces[1], z);
    REQUIRE_FALSE(cert.valid);
    REQUIRE_FALSE(cert.boundary_labels_match);
    REQUIRE(cert.total_dual_boundary ==
            chain_of(z, 1, {{"k", 2}, {"j", -2}}));
    REQUIRE(cert.note.find("boundary label mismatch") != std::string::npos);
}

TEST_CASE("1-3 split produces the bundled labeling and fuses back") {
    LabeledTriangle unsplit = tri({1, 2, 3}, "k", "m", "l");
    LabeledSurface split = split_13(unsplit, 0, "i", "n", "j");

    ComplexDocument doc = parse_document(read_file(kData + "/tri13.cplx"));
    const LabeledSurface& bundled = doc.surfaces[1];
    REQUIRE(split.triangles.size() == 3);
    for (std::size_t idx = 0; idx < 3; ++idx) {
        REQUIRE(split.triangles[idx].vertices == bundled.triangles[idx].vertices);
        REQUIRE(split.triangles[idx].labels == bundled.triangles[idx].labels);
        REQUIRE(split.triangles[idx].orient == bundled.triangles[idx].orient);
    }

    std::string route;
    LabeledTriangle fused = fuse_13(split, &route);
    REQUIRE(fused.vertices == unsplit.vertices);
    REQUIRE(fused.labels == unsplit.labels);
    REQUIRE(fused.orient == unsplit.orient);
    REQUIRE(route == "22:n->m;cancel:[0,1,3]");
}

TEST_CASE("1-3 move certificate is valid on the bundled data") {
    ComplexDocument doc = parse_document(read_file(kData + "/tri13.cplx"));
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_move_13(doc.surfaces[0].triangles[0], doc.surfaces[1], z);
    REQUIRE(cert.valid);
    REQUIRE(cert.total_dual_boundary.is_zero());
    REQUIRE(cert.route == "22:n->m;cancel:[0,1,3]");
    REQUIRE(format_group(cert.homology[0]) == "Z");
    REQUIRE(format_group(cert.homology[1]) == "0");
    REQUIRE(format_group(cert.homology[2]) == "Z");
}

TEST_CASE("1-3 move with the flipped interior orientation is rejected") {
    ComplexDocument doc = parse_document(read_file(kData + "/tri13_flip.cplx"));
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_move_13(doc.surfaces[0].triangles[0], doc.surfaces[1], z);
    REQUIRE_FALSE(cert.valid);
    REQUIRE(cert.total_dual_boundary ==
            chain_of(z, 1, {{"i", 2}, {"j", -2}, {"m", 2}}));
}

TEST_CASE("cylinder with equal circle labels is the identity certificate") {
    ComplexDocument doc = parse_document(read_file(kData + "/cylinder.cplx"));
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_cylinder(doc.surfaces[0], z);
    REQUIRE(cert.valid);
    REQUIRE(cert.kronecker_factor == 1);
    REQUIRE(cert.euler == 0);
    REQUIRE(format_group(cert.homology[1]) == "Z^2");
    REQUIRE(format_group(cert.homology[2]) == "Z");
    REQUIRE(cert.total_dual_boundary.is_zero());
}

TEST_CASE("cylinder with distinct circle labels has Kronecker factor 0") {
    ComplexDocument doc = parse_document(read_file(kData + "/cylinder_neq.cplx"));
    auto z = CoefficientGroup::integers();
    MoveCertificate cert = check_cylinder(doc.surfaces[0], z);
    REQUIRE_FALSE(cert.valid);
    REQUIRE(cert.kronecker_factor == 0);
    // The label calculus shows the defect: total boundary j - i.
    REQUIRE(cert.total_dual_boundary == chain_of(z, 1, {{"j", 1}, {"i", -1}}));
    // The structural torus evidence is unaffected by the label names.
    REQUIRE(cert.euler == 0);
    REQUIRE(format_group(cert.homology[1]) == "Z^2");
}

TEST_CASE("malformed cylinders are rejected with a diagnosis") {
    LabeledSurface s;
    s.name = "not-a-cylinder";
    s.triangles = {tri({0, 1, 2}, "a", "b", "c")};
    REQUIRE_THROWS_AS(check_cylinder(s, CoefficientGroup::integers()),
                      std::invalid_argument);
}

TEST_CASE("2-2 certificates hold over modular coefficients too") {
    ComplexDocument doc = parse_document(read_file(kData + "/square22.cplx"));
    auto z5 = CoefficientGroup::modular(5);
    MoveCertificate cert = check_move_22(doc.surfaces[0], doc.surfaces[1], z5);
    REQUIRE(cert.valid);
    REQUIRE(cert.total_dual_boundary.is_zero());
    REQUIRE(format_group(cert.homology[0]) == "Z/5");
    REQUIRE(format_group(cert.homology[2]) == "Z/5");
}
