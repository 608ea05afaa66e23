#include "affine/cartan.hpp"

#include <doctest.h>

#include <algorithm>

using namespace affine;

namespace {

// Coxeter and dual Coxeter numbers of the finite types, from tables.
std::pair<int, int> coxeter(const std::string& t) {
    if (t == "A1") return {2, 2};
    if (t == "A2") return {3, 3};
    if (t == "A3") return {4, 4};
    if (t == "C2") return {4, 3};
    if (t == "B3") return {6, 5};
    if (t == "G2") return {6, 4};
    return {0, 0};
}

int sum(const IVec& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

}  // namespace

TEST_CASE("marks satisfy the defining identities") {
    for (std::string t : {"A1", "A2", "A3", "C2", "B3", "G2"}) {
        CAPTURE(t);
        const AffineCartan C = cartan_of_type(t);
        const int n = C.size();
        for (int i = 0; i < n; ++i) {
            long ls = 0, rs = 0;
            for (int j = 0; j < n; ++j) {
                CHECK(C.d[i] * C.a[i][j] == C.d[j] * C.a[j][i]);
                ls += C.rr[j] * C.a[j][i];
                rs += C.rp[j] * C.a[i][j];
            }
            CHECK(ls == 0);
            CHECK(rs == 0);
            CHECK(C.d[i] > 0);
            CHECK(C.rr[i] > 0);
            CHECK(C.rp[i] > 0);
            CHECK(C.d[i] * C.dhat[i] == C.D);
        }
        CHECK(C.rr[0] == 1);
        CHECK(C.rp[0] == 1);
        CHECK(std::count(C.d.begin(), C.d.end(), 1) > 0);
        // the two kernels sum to the Coxeter and dual Coxeter numbers
        auto [h, hv] = coxeter(t);
        std::vector<int> got{sum(C.rr), sum(C.rp)}, want{h, hv};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("D by type") {
    CHECK(cartan_of_type("A2").D == 1);
    CHECK(cartan_of_type("C2").D == 2);
    CHECK(cartan_of_type("B3").D == 2);
    CHECK(cartan_of_type("G2").D == 3);
}

TEST_CASE("solve_marks rejects non-affine input") {
    CHECK_THROWS_AS(solve_marks(parse_matrix("2 -1\n-1 2\n")), std::invalid_argument);        // finite
    CHECK_THROWS_AS(solve_marks(parse_matrix("2 -3\n-3 2\n")), std::invalid_argument);        // hyperbolic
    CHECK_THROWS_AS(solve_marks(parse_matrix("2 -1 0\n-1 2\n0 -1 2\n")), std::invalid_argument);
    CHECK_THROWS_AS(solve_marks(parse_matrix("2 1\n-2 2\n")), std::invalid_argument);
    const AffineCartan A1 = solve_marks(parse_matrix("2 -2\n-2 2\n"));
    CHECK(A1.rr == IVec{1, 1});
}

TEST_CASE("weights: parsing, level, reflections") {
    const AffineCartan C = cartan_of_type("A2");
    const AffineWeight L0 = parse_weight(C, "L0");
    CHECK(L0.m == IVec{1, 0, 0});
    CHECK(parse_weight(C, "2L0+L1").m == IVec{2, 1, 0});
    CHECK(parse_weight(C, "1,2,3;5").n == 5);
    CHECK(parse_weight(C, "rho").m == IVec{1, 1, 1});
    CHECK(level(C, parse_weight(C, "2L0+L1")) == 3);
    for (int i = 0; i <= C.r; ++i) {
        const AffineWeight s = simple_reflection(C, i, L0);
        CHECK(simple_reflection(C, i, s) == L0);
        CHECK(invariant_form(C, s, s) == invariant_form(C, L0, L0));
    }
    CHECK_THROWS(parse_weight(C, "L7"));
}

TEST_CASE("weight_diff is the inverse of adding roots") {
    const AffineCartan C = cartan_of_type("C2");
    const AffineWeight lam = parse_weight(C, "L0+L2");
    const IVec b{1, 2, 1};
    const AffineWeight mu = lam - root_lattice_weight(C, b);
    CHECK(weight_diff(C, lam, mu) == b);
    CHECK(hgt(b) == 4);
    CHECK_THROWS_AS(weight_diff(C, lam, parse_weight(C, "L1")), std::domain_error);
}
