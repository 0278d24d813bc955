#include <catch2/catch_amalgamated.hpp>

#include "pachner/report.hpp"

#include <cstdio>
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

std::string golden(const std::string& name) {
    return read_file(kData + "/golden/" + name);
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

struct GoldenCase {
    std::vector<std::string> args;
    std::string file;
};

std::vector<GoldenCase> golden_cases() {
    return {
        {{"homology", kData + "/s4.cplx"}, "s4_homology.txt"},
        {{"dual", kData + "/s4.cplx"}, "s4_dual.txt"},
        {{"boundary", kData + "/square22.cplx"}, "square22_boundary.txt"},
        {{"move22", kData + "/square22.cplx"}, "square22_move22.txt"},
        {{"move13", kData + "/tri13.cplx"}, "tri13_move13.txt"},
        {{"cylinder", kData + "/cylinder.cplx"}, "cylinder_cylinder.txt"},
        {{"pentagon", kData + "/pentagon.cplx"}, "pentagon_pentagon.txt"},
        {{"ainf", kData + "/square22.cplx", "--convention", "paper", "--probe", "n2"},
         "square22_ainf_n2.txt"},
        {{"ainf", kData + "/square22.cplx", "--convention", "paper", "--probe", "n3"},
         "square22_ainf_n3.txt"},
        {{"ainf", kData + "/pentagon.cplx", "--convention", "paper", "--probe", "n4"},
         "pentagon_ainf_n4.txt"},
    };
}

}  // namespace

TEST_CASE("every golden invocation reproduces its stored report byte for byte") {
    for (const auto& c : golden_cases()) {
        INFO(c.file);
        CliResult r = run_cli(c.args);
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.error.empty());
        REQUIRE(r.report == golden(c.file));
    }
}

TEST_CASE("reports are deterministic across repeated runs") {
    for (const auto& c : golden_cases()) {
        INFO(c.file);
        CliResult a = run_cli(c.args);
        CliResult b = run_cli(c.args);
        REQUIRE(a.report == b.report);
        REQUIRE(a.exit_code == b.exit_code);
    }
}

TEST_CASE("homology over z2 reports the mod-2 sphere groups") {
    CliResult r = run_cli({"homology", kData + "/s4.cplx", "--coeff", "z2"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.report == "COMMAND=homology s4.cplx --coeff z2\n"
                        "H0=Z/2 H1=0 H2=Z/2\n");
}

TEST_CASE("boundary of the closed tetrahedron surface vanishes") {
    CliResult r = run_cli({"boundary", kData + "/s4.cplx"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.report == "COMMAND=boundary s4.cplx\n"
                        "BOUNDARY[s4]=0\n"
                        "TOTAL=0\n");
}

TEST_CASE("failed checks exit with status 1 and name the defect") {
    CliResult mismatch = run_cli({"move22", kData + "/square22_mismatch.cplx"});
    REQUIRE(mismatch.exit_code == 1);
    REQUIRE(contains(mismatch.report, "BOUNDARY_MATCH=false"));
    REQUIRE(contains(mismatch.report, "DUAL_BOUNDARY=-2j*+2k*"));
    REQUIRE(contains(mismatch.report,
                     "NOTE=boundary label mismatch at [0,3]: left j, right k"));
    REQUIRE(contains(mismatch.report, "VALID=false"));

    CliResult flip = run_cli({"move13", kData + "/tri13_flip.cplx"});
    REQUIRE(flip.exit_code == 1);
    REQUIRE(contains(flip.report, "DUAL_BOUNDARY=2i*-2j*+2m*"));
    REQUIRE(contains(flip.report, "VALID=false"));

    CliResult neq = run_cli({"cylinder", kData + "/cylinder_neq.cplx"});
    REQUIRE(neq.exit_code == 1);
    REQUIRE(contains(neq.report, "FACTOR=0"));
    REQUIRE(contains(neq.report, "DUAL_BOUNDARY=-i*+j*"));
    REQUIRE(contains(neq.report, "NOTE=boundary circles carry distinct labels: i vs j"));
}

TEST_CASE("the standard convention flags the n3 probe") {
    CliResult r =
        run_cli({"ainf", kData + "/square22.cplx", "--convention", "standard", "--probe", "n3"});
    REQUIRE(r.exit_code == 1);
    REQUIRE(contains(r.report, "CONVENTION=standard"));
    REQUIRE(contains(r.report, "LEFT=0 RIGHT=-2 RESIDUAL=2"));
    REQUIRE(contains(r.report, "M1M1=0"));
}

TEST_CASE("ainf defaults to the standard convention and probe n2") {
    CliResult r = run_cli({"ainf", kData + "/square22.cplx"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(contains(r.report, "CONVENTION=standard"));
    REQUIRE(contains(r.report, "PROBE=n2"));
    REQUIRE(contains(r.report, "INPUT=l*(x)i* on [0,1,2]"));
    REQUIRE(contains(r.report, "LEFT=-1 RIGHT=-1 RESIDUAL=0"));
}

TEST_CASE("usage and model errors exit with status 2 and an error line") {
    CliResult missing = run_cli({"homology", kData + "/does_not_exist.cplx"});
    REQUIRE(missing.exit_code == 2);
    REQUIRE(contains(missing.error, "error: cannot open file"));

    CliResult no_args = run_cli({});
    REQUIRE(no_args.exit_code == 2);
    REQUIRE(contains(no_args.error, "usage: pachner"));

    CliResult flag = run_cli({"homology", kData + "/s4.cplx", "--wat"});
    REQUIRE(flag.exit_code == 2);
    REQUIRE(contains(flag.error, "unknown flag --wat"));

    CliResult command = run_cli({"frobnicate", kData + "/s4.cplx"});
    REQUIRE(command.exit_code == 2);
    REQUIRE(contains(command.error, "unknown command 'frobnicate'"));

    CliResult coeff = run_cli({"homology", kData + "/s4.cplx", "--coeff", "z1"});
    REQUIRE(coeff.exit_code == 2);
    REQUIRE(contains(coeff.error, "modulus must be at least 2"));

    CliResult coeff_q = run_cli({"homology", kData + "/s4.cplx", "--coeff", "q"});
    REQUIRE(coeff_q.exit_code == 2);

    CliResult probe = run_cli({"ainf", kData + "/square22.cplx", "--probe", "n5"});
    REQUIRE(probe.exit_code == 2);
    REQUIRE(contains(probe.error, "--probe expects n1..n4"));

    CliResult conv = run_cli({"ainf", kData + "/square22.cplx", "--convention", "loose"});
    REQUIRE(conv.exit_code == 2);

    CliResult dangling = run_cli({"homology", kData + "/s4.cplx", "--coeff"});
    REQUIRE(dangling.exit_code == 2);
    REQUIRE(contains(dangling.error, "needs a value"));
}

TEST_CASE("parse failures surface the file name and position") {
    std::string path = "cli_parse_failure.cplx";
    {
        std::ofstream out(path);
        out << "surface s\nfoo bar\n";
    }
    CliResult r = run_cli({"homology", path});
    std::remove(path.c_str());
    REQUIRE(r.exit_code == 2);
    REQUIRE(contains(r.error, "cli_parse_failure.cplx: line 2, column 1"));
    REQUIRE(contains(r.error, "unknown directive 'foo'"));
}
