#include <catch2/catch_amalgamated.hpp>

#include "pachner/parse.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace pachner;

namespace {

const std::string kData = PACHNER_DATA_DIR;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ComplexDocument parse_file(const std::string& name) {
    return parse_document(read_file(kData + "/" + name));
}

/// Parses text expected to fail and hands back the diagnostic.
ParseError expect_error(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a ParseError");
    return ParseError("unreachable", 0, 0);
}

}  // namespace

TEST_CASE("bundled tetrahedron file parses to the documented shape") {
    ComplexDocument doc = parse_file("s4.cplx");
    REQUIRE(doc.name == "s4");
    REQUIRE(doc.surfaces.size() == 1);
    const LabeledSurface& s = doc.surfaces[0];
    REQUIRE(s.name == "s4");
    REQUIRE(s.declared_vertices == std::vector<VertexId>{0, 1, 2, 3});
    REQUIRE(s.vertex_glues.empty());
    REQUIRE(s.triangles.size() == 4);

    REQUIRE(s.triangles[0].vertices == std::array<VertexId, 3>{0, 1, 3});
    REQUIRE(s.triangles[0].labels[0].name == "m");
    REQUIRE(s.triangles[0].labels[1].name == "j");
    REQUIRE(s.triangles[0].labels[2].name == "i");
    REQUIRE(s.triangles[0].orient == Orientation::Plus);
    REQUIRE(s.triangles[1].orient == Orientation::Plus);
    REQUIRE(s.triangles[2].orient == Orientation::Op);
    REQUIRE(s.triangles[3].orient == Orientation::Op);

    REQUIRE(doc.squares.empty());
    REQUIRE(doc.pentagons.empty());
    REQUIRE(doc.mtable.empty());
}

TEST_CASE("bundled square and pentagon files carry their cells") {
    ComplexDocument sq = parse_file("square22.cplx");
    REQUIRE(sq.name == "left");
    REQUIRE(sq.surfaces.size() == 2);
    REQUIRE(sq.surfaces[0].name == "left");
    REQUIRE(sq.surfaces[1].name == "right");
    REQUIRE(sq.surfaces[0].triangles.size() == 2);
    REQUIRE(sq.surfaces[1].triangles.size() == 2);
    REQUIRE(sq.squares.size() == 1);
    REQUIRE(sq.squares[0].corners == std::array<VertexId, 4>{0, 1, 2, 3});

    ComplexDocument pent = parse_file("pentagon.cplx");
    REQUIRE(pent.surfaces.size() == 1);
    REQUIRE(pent.surfaces[0].triangles.size() == 3);
    REQUIRE(pent.pentagons.size() == 1);
    REQUIRE(pent.pentagons[0].corners == std::array<VertexId, 5>{0, 1, 2, 3, 4});
    REQUIRE(pent.pentagons[0].diagonals ==
            std::array<std::string, 5>{"t", "s", "p", "r", "q"});
}

TEST_CASE("bundled cylinder file records its vertex gluings") {
    ComplexDocument doc = parse_file("cylinder.cplx");
    REQUIRE(doc.surfaces.size() == 1);
    const LabeledSurface& s = doc.surfaces[0];
    REQUIRE(s.vertex_glues ==
            std::vector<std::pair<VertexId, VertexId>>{{0, 3}, {1, 2}});
    REQUIRE(s.triangles.size() == 2);
    REQUIRE(s.triangles[0].orient == Orientation::Plus);
    REQUIRE(s.triangles[1].orient == Orientation::Op);
    REQUIRE(s.triangles[1].vertices == std::array<VertexId, 3>{2, 0, 1});
}

TEST_CASE("comments and blank lines are ignored; orient defaults to plus") {
    ComplexDocument doc = parse_document("# header\n"
                                         "\n"
                                         "surface s  # trailing\n"
                                         "triangle 0 1 2 labels a b c # note\n");
    REQUIRE(doc.surfaces.size() == 1);
    REQUIRE(doc.surfaces[0].triangles.size() == 1);
    REQUIRE(doc.surfaces[0].triangles[0].orient == Orientation::Plus);
}

TEST_CASE("mtable lines strip stars and record signs") {
    ComplexDocument doc = parse_document("surface s\n"
                                         "triangle 0 1 2 labels a b c\n"
                                         "mtable\n"
                                         "m2: l* i* -> n*\n"
                                         "sign - m1: v0 -> x*\n"
                                         "m3: a b* c -> d\n");
    REQUIRE(doc.mtable.size() == 3);
    REQUIRE(doc.mtable[0] == MTableEntry{2, {"l", "i"}, "n", 1});
    REQUIRE(doc.mtable[1] == MTableEntry{1, {"v0"}, "x", -1});
    REQUIRE(doc.mtable[2] == MTableEntry{3, {"a", "b", "c"}, "d", 1});
}

TEST_CASE("a surface directive ends mtable mode") {
    ComplexDocument doc = parse_document("surface s\n"
                                         "mtable\n"
                                         "m2: a b -> c\n"
                                         "surface t\n"
                                         "triangle 0 1 2 labels x y z\n");
    REQUIRE(doc.mtable.size() == 1);
    REQUIRE(doc.surfaces.size() == 2);
    REQUIRE(doc.surfaces[1].triangles.size() == 1);
}

TEST_CASE("diagnostics carry one-based line and column positions") {
    ParseError unknown = expect_error("surface s\nfoo bar\n");
    REQUIRE(unknown.line == 2);
    REQUIRE(unknown.column == 1);
    REQUIRE(std::string(unknown.what()) == "line 2, column 1: unknown directive 'foo'");

    ParseError bad_int = expect_error("surface s\ntriangle 0 x 2 labels a b c\n");
    REQUIRE(bad_int.line == 2);
    REQUIRE(bad_int.column == 12);
    REQUIRE(std::string(bad_int.what()).find("expected an integer, got 'x'") !=
            std::string::npos);

    ParseError arity = expect_error("surface s\ntriangle 0 1 2\n");
    REQUIRE(arity.line == 2);
    REQUIRE(std::string(arity.what()).find("v0 v1 v2 labels a b c") != std::string::npos);
}

TEST_CASE("structural directives are validated in place") {
    REQUIRE_THROWS_AS(parse_document("vertex 1\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("triangle 0 1 2 labels a b c\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nglue 1\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\ntriangle 0 1 2 label a b c\n"), ParseError);
    REQUIRE_THROWS_AS(
        parse_document("surface s\ntriangle 0 1 2 labels a b c orient *\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("square 0 1 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("pentagon 0 1 2 3 4 diag t s p r q\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable extra\n"), ParseError);
}

TEST_CASE("mtable diagnostics") {
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nm2: a b\n"), ParseError);
    ParseError arity = expect_error("surface s\nmtable\nm2: a -> b\n");
    REQUIRE(std::string(arity.what()).find("m2 takes 2 inputs, got 1") != std::string::npos);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nm5: a b c d e -> f\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nfuse: a b -> c\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nm2: a b -> c -> d\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nm2: a b -> c d\n"), ParseError);
    REQUIRE_THROWS_AS(parse_document("surface s\nmtable\nsign * m2: a b -> c\n"), ParseError);
}

TEST_CASE("empty and comment-only documents are rejected") {
    ParseError empty = expect_error("");
    REQUIRE(empty.line == 1);
    REQUIRE(std::string(empty.what()).find("empty document") != std::string::npos);
    REQUIRE_THROWS_AS(parse_document("# only a comment\n\n# another\n"), ParseError);
}

TEST_CASE("serialization round-trips every bundled file") {
    const std::vector<std::string> files = {
        "s4.cplx",           "square22.cplx", "tri13.cplx",
        "cylinder.cplx",     "pentagon.cplx", "square22_mismatch.cplx",
        "tri13_flip.cplx",   "cylinder_neq.cplx"};
    for (const auto& f : files) {
        INFO(f);
        ComplexDocument doc = parse_file(f);
        ComplexDocument again = parse_document(serialize_document(doc));
        REQUIRE(again == doc);
    }
}

TEST_CASE("serialization round-trips explicit tables and signs") {
    ComplexDocument doc = parse_document("surface s\n"
                                         "vertex 0 1 2\n"
                                         "glue 0 2\n"
                                         "triangle 0 1 2 labels a b c orient -\n"
                                         "square 0 1 2 3\n"
                                         "pentagon 0 1 2 3 4 diagonals t s p r q\n"
                                         "mtable\n"
                                         "sign - m2: a b -> c\n"
                                         "m1: v0 -> a\n");
    ComplexDocument again = parse_document(serialize_document(doc));
    REQUIRE(again == doc);
}
