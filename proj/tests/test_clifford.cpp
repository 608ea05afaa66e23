#include "affine/clifford.hpp"

#include <doctest.h>

#include <random>

using namespace affine;

namespace {

CliffordElt random_elt(std::mt19937& rng, int n) {
    std::uniform_int_distribution<Mask> mask(0, (Mask(1) << n) - 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    CliffordElt x = cl_zero(n);
    for (int k = 0; k < 4; ++k) x = x + coef(rng) * cl_monomial(n, mask(rng), mask(rng));
    return x;
}

}  // namespace

TEST_CASE("defining relations") {
    for (int n = 1; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto ei = cl_e(n, i), ej = cl_e(n, j), si = cl_estar(n, i), sj = cl_estar(n, j);
                CHECK((multiply(ei, ej) + multiply(ej, ei)).is_zero());
                CHECK((multiply(si, sj) + multiply(sj, si)).is_zero());
                CHECK(multiply(ei, sj) + multiply(sj, ei) == (i == j ? cl_one(n) : cl_zero(n)));
            }
}

TEST_CASE("property: associativity, sigma is an involutive antiautomorphism") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_elt(rng, n), b = random_elt(rng, n), c = random_elt(rng, n);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(sigma(multiply(a, b)) == multiply(sigma(b), sigma(a)));
            CHECK(sigma(sigma(a)) == a);
            CHECK(swap_dual(multiply(a, b)) == multiply(swap_dual(a), swap_dual(b)));
        }
}

TEST_CASE("dimension 4^n: the Stan representation is faithful") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = ident_check(n);
        CHECK(r.faithful);
        CHECK(r.pass);
    }
}

TEST_CASE("Stan and Cost are modules") {
    std::mt19937 rng(11);
    const int n = 3;
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_elt(rng, n), b = random_elt(rng, n);
        std::vector<long> v(1 << n);
        for (long& x : v) x = static_cast<long>(rng() % 5) - 2;
        for (auto mod : {CliffordModule::Stan, CliffordModule::Cost})
            CHECK(act(multiply(a, b), v, mod) == act(a, act(b, v, mod), mod));
    }
    // e*_i kills the generator of Stan, e_i that of Cost
    std::vector<long> vac(1 << n, 0);
    vac[0] = 1;
    CHECK(act(cl_estar(n, 2), vac, CliffordModule::Stan) == std::vector<long>(1 << n, 0));
    CHECK(act(cl_e(n, 2), vac, CliffordModule::Cost) == std::vector<long>(1 << n, 0));
}

TEST_CASE("matrix units: support exact, sign eps(I)(-1)^{n(n-1)/2}") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = matrix_unit_check(n);
        CHECK(r.pairs == (1 << (2 * n)));
        CHECK(r.exactUpToSign());
        CHECK(r.predictedOk == r.pairs);
        if (n == 1) CHECK(r.literalOk == 2 * r.pairs);
        if (n >= 2) CHECK(r.literalOk < 2 * r.pairs);
    }
}

TEST_CASE("format") {
    CHECK(format(cl_one(2)) == "+1");
    CHECK(format(cl_zero(2)) == "0");
    CHECK(format(multiply(cl_e(2, 2), cl_e(2, 1))) == "-e1.e2");
}
