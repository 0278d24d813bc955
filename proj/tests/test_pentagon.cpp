#include <catch2/catch_amalgamated.hpp>

#include "pachner/pentagon.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

using namespace pachner;

namespace {

const char* kLeft =
    "(F^{e*t*r*}_{a*b*p*}(x)id^{t*}_{c*d*})(F^{e*d*t*}_{p*c*q*}(x)id^{p*}_{a*b*})";
const char* kRight =
    "sum_{s in C*1}"
    "(id^{e*}_{a*r*}(x)F^{r*d*t*}_{b*c*s*})"
    "(F^{e*d*r*}_{a*s*q*}(x)id^{s*}_{b*c*})"
    "(id^{e*}_{q*d*}(x)F^{q*c*s*}_{a*b*p*})";

PentagonLabels default_labels() {
    PentagonLabels L;
    L.a = "a";
    L.b = "b";
    L.c = "c";
    L.d = "d";
    L.e = "e";
    L.t = "t";
    L.s = "s";
    L.p = "p";
    L.r = "r";
    L.q = "q";
    return L;
}

}  // namespace

TEST_CASE("pentagon paths have lengths two and three with matching endpoints") {
    PentagonResult r = check_pentagon(default_labels());
    REQUIRE(r.certificate.valid);
    REQUIRE(r.states.size() == 5);
    REQUIRE(r.left_steps.size() == 2);
    REQUIRE(r.right_steps.size() == 3);
    REQUIRE(r.left_path.front() == r.right_path.front());
    REQUIRE(r.left_path.back() == r.right_path.back());
    REQUIRE(r.certificate.coefficient_index_count == 10);
    REQUIRE(r.certificate.total_dual_boundary.is_zero());

    std::set<std::string> names;
    for (const auto& st : r.states)
        names.insert(st.name);
    REQUIRE(names.size() == 5);
    REQUIRE(names.count("{p,q}") == 1);
    REQUIRE(names.count("{t,r}") == 1);
}

TEST_CASE("pentagon compositions render both sides of the coherence identity") {
    PentagonResult r = check_pentagon(default_labels());
    REQUIRE(r.left_composition == kLeft);
    REQUIRE(r.right_composition == kRight);
}

TEST_CASE("every pentagon step is itself a valid 2-2 certificate") {
    PentagonResult r = check_pentagon(default_labels());
    for (const auto& step : r.left_steps) {
        REQUIRE(step.certificate.valid);
        REQUIRE(step.certificate.boundary_labels_match);
    }
    for (const auto& step : r.right_steps) {
        REQUIRE(step.certificate.valid);
        REQUIRE(step.certificate.boundary_labels_match);
    }
}

TEST_CASE("pentagon confluence under all 120 boundary relabelings") {
    std::array<std::string, 5> sides = {"a", "b", "c", "d", "e"};
    std::sort(sides.begin(), sides.end());
    int count = 0;
    do {
        PentagonLabels L = default_labels();
        L.a = sides[0];
        L.b = sides[1];
        L.c = sides[2];
        L.d = sides[3];
        L.e = sides[4];
        PentagonResult r = check_pentagon(L);
        REQUIRE(r.certificate.valid);
        REQUIRE(r.left_steps.size() == 2);
        REQUIRE(r.right_steps.size() == 3);
        REQUIRE(r.left_path.back() == r.right_path.back());
        REQUIRE(r.certificate.total_dual_boundary.is_zero());
        ++count;
    } while (std::next_permutation(sides.begin(), sides.end()));
    REQUIRE(count == 120);
}

TEST_CASE("degenerate pentagon labelings are rejected") {
    PentagonLabels L = default_labels();
    L.b = "a";  // duplicate
    REQUIRE_THROWS_AS(check_pentagon(L), std::invalid_argument);

    PentagonLabels M = default_labels();
    M.corners = {0, 1, 2, 3, 3};
    REQUIRE_THROWS_AS(check_pentagon(M), std::invalid_argument);
}
