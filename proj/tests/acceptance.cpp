// Acceptance gate: one line per criterion.
//
// Every comparison is exact (integer or rational equality), so the pinned
// tolerance is zero. A criterion whose stated form fails is reported
// FAIL together with the corrected statement that was checked alongside it;
// the exit status is 0 when every criterion passes or fails only in the
// documented way (corrected form passing), see README "Known discrepancies".

#include "affine/clifford.hpp"
#include "affine/resolutions.hpp"
#include "affine/semiregular.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace affine;

namespace {

constexpr long kTolerance = 0;  // exact arithmetic throughout
constexpr int kSearchBound = 4;

// Criteria whose stated form is known to fail; the gate accepts them only
// when the corrected form passes.
const std::set<int> kKnownLiteralFailures = {3, 5, 8, 9, 10};

struct Outcome {
    bool literal = false;
    bool corrected = true;  // only meaningful when the literal form fails
    std::string detail;
};

std::string frac(long a, long b) { return std::to_string(a) + "/" + std::to_string(b); }

bool same(long a, long b) { return a - b <= kTolerance && b - a <= kTolerance; }

Outcome marks() {
    Outcome o;
    o.literal = true;
    std::ostringstream d;
    for (std::string t : {"A1", "A2", "C2", "G2"}) {
        const AffineCartan C = solve_marks(affine_matrix_of_type(t));
        const int n = C.size();
        bool ok = C.D >= 1 && C.D <= 3 && C.rr[0] == 1 && C.rp[0] == 1;
        bool unit = false;
        for (int i = 0; i < n; ++i) {
            long ls = 0, rs = 0;
            for (int j = 0; j < n; ++j) {
                ok = ok && same(long(C.d[i]) * C.a[i][j], long(C.d[j]) * C.a[j][i]);
                ls += long(C.rr[j]) * C.a[j][i];
                rs += long(C.rp[j]) * C.a[i][j];
            }
            ok = ok && ls == 0 && rs == 0 && C.rr[i] > 0 && C.rp[i] > 0 && (C.d[i] == 1 || C.d[i] == C.D);
            unit = unit || C.d[i] == 1;
        }
        ok = ok && unit;
        d << t << ":D=" << C.D << (ok ? "" : "!") << " ";
        o.literal = o.literal && ok;
    }
    o.detail = d.str();
    return o;
}

Outcome lengths() {
    Outcome o;
    o.literal = true;
    std::ostringstream d;
    for (std::string t : {"A1", "A2"}) {
        WeylGroup G(cartan_of_type(t));
        long ok = 0, all = 0;
        for (const auto& rec : G.enumerate(8)) {
            ++all;
            ok += G.length(rec.element) == static_cast<int>(rec.word.size());
        }
        d << t << " " << frac(ok, all) << " ";
        o.literal = o.literal && ok == all;
    }
    o.detail = d.str();
    return o;
}

Outcome root_sets() {
    Outcome o;
    long unionLit = 0, unionTrue = 0, pairs = 0, sumLit = 0, sumTrue = 0, elts = 0;
    for (std::string t : {"A1", "A2"}) {
        WeylGroup G(cartan_of_type(t));
        const auto& C = G.cartan();
        const auto ball = G.enumerate(4);
        for (const auto& a : ball) {
            ++elts;
            IVec s(C.size(), 0);
            for (const auto& h : G.r_set(a.element))
                for (int i = 0; i < C.size(); ++i) s[i] += h[i];
            // coordinate j of a coroot sum is its pairing with Lambda_j, and
            // (rho - w^{-1} rho)_j = hgt(Lambda_j - w Lambda_j)
            bool lit = true, tru = true;
            for (int j = 0; j < C.size(); ++j) {
                const AffineWeight L = fundamental(C, j);
                const int h = hgt(weight_diff(C, L, G.apply(a.element, L)));
                lit = lit && s[j] == h;
                tru = tru && s[j] == -h;
            }
            sumLit += lit;
            sumTrue += tru;
        }
        for (const auto& w1 : ball)
            for (const auto& w2 : ball) {
                const WeylElt w = G.mul(w2.element, w1.element);
                if (G.length(w) != w1.ell + w2.ell) continue;
                ++pairs;
                const auto R = G.r_set(w);
                auto R1 = G.r_set(w1.element), R2 = G.r_set(w2.element);
                std::vector<AffineRoot> lit = R1, tru = R1;
                lit.insert(lit.end(), R2.begin(), R2.end());
                const WeylElt inv = G.inverse(w1.element);
                for (const auto& h : R2) tru.push_back(G.apply(inv, h));
                std::sort(lit.begin(), lit.end());
                std::sort(tru.begin(), tru.end());
                auto disjoint = [](const std::vector<AffineRoot>& v) {
                    return std::adjacent_find(v.begin(), v.end()) == v.end();
                };
                unionLit += disjoint(lit) && lit == R;
                unionTrue += disjoint(tru) && tru == R;
            }
    }
    o.literal = unionLit == pairs && sumLit == elts;
    o.corrected = unionTrue == pairs && sumTrue == elts;
    o.detail = "union " + frac(unionLit, pairs) + ", sum " + frac(sumLit, elts) +
               "; corrected R_w1 + w1^-1 R_w2 " + frac(unionTrue, pairs) + ", sum w^-1 rho - rho " +
               frac(sumTrue, elts);
    return o;
}

Outcome transvections() {
    Outcome o;
    long ok = 0, all = 0;
    for (std::string t : {"A1", "A2", "C2", "G2"}) {
        WeylGroup G(cartan_of_type(t));
        const auto& C = G.cartan();
        for (size_t p = 0; p < C.fin_coroots.size(); ++p)
            for (int m = -3; m <= 3; ++m) {
                IVec z = C.fin_coroot_prime[p];
                for (int& x : z) x *= (C.D / C.fin_coroot_d[p]) * m;
                ++all;
                const WeylElt lhs = G.mul(G.s_alpha_m(static_cast<int>(p), 0), G.s_alpha_m(static_cast<int>(p), m));
                ok += lhs.mv == G.theta_vector(z).mv;
            }
    }
    o.literal = ok == all;
    o.detail = frac(ok, all);
    return o;
}

Outcome semi_infinite_length() {
    Outcome o;
    WeylGroup G(cartan_of_type("A1"));
    const bool values = G.si_length(G.s(1)) == 1 && G.si_length(G.s(0)) == -1;
    long par = 0, ball = 0;
    for (const auto& rec : G.enumerate(6)) {
        ++ball;
        par += (rec.ell - rec.siEll) % 2 == 0;
    }
    const auto small = G.enumerate(3);
    long okL = 0, okR = 0, pairs = 0;
    for (const auto& a : small)
        for (const auto& b : small) {
            ++pairs;
            okL += G.maincomb_verify(a.element, b.element, kSearchBound, TranslationSide::Left).ok;
            okR += G.maincomb_verify(a.element, b.element, kSearchBound, TranslationSide::Right).ok;
        }
    o.literal = values && par == ball && okL == pairs;
    o.corrected = values && par == ball && okR == pairs;
    o.detail = std::string("values ") + (values ? "ok" : "bad") + ", parity " + frac(par, ball) +
               ", maincomb theta-left " + frac(okL, pairs) + "; corrected theta-right " + frac(okR, pairs);
    return o;
}

Outcome bgg() {
    Outcome o;
    o.literal = true;
    std::ostringstream d;
    for (auto [t, l] : std::vector<std::pair<std::string, std::string>>{{"A1", "L0"}, {"A1", "2L0"}, {"A2", "L0"}}) {
        WeylGroup G(cartan_of_type(t));
        const AffineWeight lam = parse_weight(G.cartan(), l);
        const auto e = euler_check(G, bgg_complex(G, lam, 8), lam, 8, 1);
        d << t << "/" << l << (e.pass ? " ok " : " bad ");
        o.literal = o.literal && e.pass;
    }
    o.detail = d.str();
    return o;
}

Outcome twisted() {
    Outcome o;
    WeylGroup G(cartan_of_type("A1"));
    const AffineWeight lam = parse_weight(G.cartan(), "L0");
    long ok = 0, all = 0;
    for (const auto& rec : G.enumerate(3)) {
        ++all;
        const auto terms = twisted_bgg_complex(G, rec.element, lam, 6);
        // B_x(lambda)[-l(x)] summed with signs (-1)^{l^x(v)}: (-1)^{l(x)} ch L
        ok += euler_check(G, terms, lam, 6, rec.ell % 2 ? -1 : 1, -rec.ell).pass;
    }
    o.literal = ok == all;
    o.detail = frac(ok, all);
    return o;
}

Outcome window() {
    Outcome o;
    const int big = 1 << 20;
    bool win = true;
    std::ostringstream d;
    for (auto [t, l, N] : std::vector<std::tuple<std::string, std::string, int>>{
             {"A1", "L0", 8}, {"A1", "2L0", 8}, {"A2", "L0", 6}}) {
        WeylGroup G(cartan_of_type(t));
        const AffineWeight lam = parse_weight(G.cartan(), l);
        const auto e = euler_check(G, si_bgg_window(G, lam, -big, big, N), lam, N, 1);
        const auto wide = euler_sum(G, si_bgg_window(G, lam, -big, big, N + 2), lam, N + 2);
        const bool ok = e.pass && truncate(wide, N) == e.sum;
        d << t << "/" << l << (ok ? " ok, " : " bad, ");
        win = win && ok;
    }
    WeylGroup G(cartan_of_type("A1"));
    const auto sched = translation_schedule(G, {1}, 6);
    long okL = 0, okR = 0, all = 0;
    for (const auto& rec : G.enumerate(4)) {
        ++all;
        okL += limit_stabilization(G, sched, rec.element, TranslationSide::Left).stabilized;
        okR += limit_stabilization(G, sched, rec.element, TranslationSide::Right).stabilized;
    }
    o.literal = win && okL == all;
    o.corrected = win && okR == all;
    d << "limit theta-left " << frac(okL, all) << "; corrected theta-right " << frac(okR, all);
    o.detail = d.str();
    return o;
}

Outcome clifford() {
    Outcome o;
    bool base = true;
    long lit = 0, pred = 0, entries = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto id = ident_check(n);  // faithful means the Stan image has rank 4^n
        base = base && id.pass && id.faithful;
        std::vector<CliffordElt> gens{cl_one(n)};
        for (int i = 1; i <= n; ++i) {
            gens.push_back(cl_e(n, i));
            gens.push_back(cl_estar(n, i));
        }
        for (const auto& a : gens)
            for (const auto& b : gens)
                for (const auto& c : gens) base = base && multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
        const auto mu = matrix_unit_check(n);
        base = base && mu.exactUpToSign();
        lit += mu.literalOk;
        pred += 2L * mu.predictedOk;
        entries += 2L * mu.pairs;
    }
    o.literal = base && lit == entries;
    o.corrected = base && pred == entries;
    o.detail = std::string("dim/assoc/ident ") + (base ? "ok" : "bad") + ", matrix units sign +1 " + frac(lit, entries) +
               "; corrected sign eps(I)(-1)^{n(n-1)/2} " + frac(pred, entries);
    return o;
}

Outcome semiregular() {
    Outcome o;
    Envelope sl2(builtin_algebra("sl2"));
    const auto e = exp_action_check(sl2, 3, 1, 2);
    const bool act = e.leftOk == e.leftChecks && e.diagOk == e.diagChecks;
    Envelope heis(builtin_algebra("heisenberg"));
    const auto c = comult_check(heis, 4);
    Envelope sl3(builtin_algebra("sl3"));
    const auto it = iterate_check(sl3, default_filtration(sl3), 6);
    const auto dg = dg_checks(sl3, 4);
    const bool rest = act && c.equivariant == c.checks && it.dimsEqual && it.pass;
    o.literal = rest && e.homLiteralOk == e.homChecks && dg.squareALiteral && dg.squareB && dg.transportLiteral;
    o.corrected = rest && e.homOk == e.homChecks && dg.pass();
    std::ostringstream d;
    d << "sigma(u1)sigma(u2) " << frac(e.homLiteralOk, e.homChecks) << ", act " << (act ? "ok" : "bad")
      << ", comult " << frac(c.equivariant, c.checks) << ", iterate dims " << (it.dimsEqual ? "ok" : "bad")
      << ", dg (a)(b)(c) stated D_A " << (dg.squareALiteral && dg.transportLiteral ? "ok" : "bad")
      << "; corrected sigma(u2)sigma(u1) " << frac(e.homOk, e.homChecks) << ", D_A with -l "
      << (dg.pass() ? "ok" : "bad");
    o.detail = d.str();
    return o;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char* name;
        Outcome (*fn)();
    };
    const Item items[] = {{1, "marks", marks},
                          {2, "length-agreement", lengths},
                          {3, "root-sets", root_sets},
                          {4, "transvection", transvections},
                          {5, "semi-infinite-length", semi_infinite_length},
                          {6, "bgg-euler", bgg},
                          {7, "twisted-bgg", twisted},
                          {8, "semi-infinite-window", window},
                          {9, "clifford", clifford},
                          {10, "semiregular", semiregular}};
    bool gate = true;
    int passed = 0;
    for (const auto& it : items) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = it.fn();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("CRITERION %d %s %s (%s) [%.1fs]\n", it.id, it.name, o.literal ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        passed += o.literal;
        if (!o.literal) gate = gate && kKnownLiteralFailures.count(it.id) && o.corrected;
    }
    std::printf("SUMMARY %d/10 criteria pass as stated; remaining failures %s\n", passed,
                gate ? "are the documented ones, corrected forms pass" : "include unexpected ones");
    return gate ? 0 : 1;
}
