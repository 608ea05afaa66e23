#include "affine/resolutions.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace affine {

namespace {

ResolutionTerm make_term(const WeylGroup& G, const LengthRecord& rec, const AffineWeight& lambda, int label) {
    ResolutionTerm t;
    t.w = rec.element;
    t.word = rec.word;
    t.label = label;
    t.homDegree = -label;
    t.weight = G.dot(rec.element, lambda);
    t.qShift = -hgt(weight_diff(G.cartan(), lambda, t.weight));
    return t;
}

/// Adds (-1)^(homDegree + shift) ch M(term) under lambda into acc.
void accumulate(const WeylGroup& G, const std::map<IVec, long>& table, const ResolutionTerm& t,
                const AffineWeight& lambda, int N, int shift, Character& acc) {
    const IVec d = weight_diff(G.cartan(), lambda, t.weight);
    const long sign = (t.homDegree + shift) % 2 ? -1 : 1;
    const int room = N - hgt(d);
    for (const auto& [b, v] : table) {
        if (hgt(b) > room) continue;
        IVec b2 = b;
        for (size_t i = 0; i < b2.size(); ++i) b2[i] += d[i];
        acc.add(b2, sign * v);
    }
}

Character empty_char(const AffineWeight& lambda, int N) {
    Character c;
    c.base = lambda;
    c.N = N;
    return c;
}

}  // namespace

std::vector<ResolutionTerm> bgg_complex(const WeylGroup& G, const AffineWeight& lambda, int N) {
    std::vector<ResolutionTerm> out;
    for (const auto& rec : contributing_elements(G, lambda, N)) out.push_back(make_term(G, rec, lambda, rec.ell));
    return out;
}

std::vector<ResolutionTerm> bgg_terms(const WeylGroup& G, const AffineWeight& lambda, int m, int N) {
    std::vector<ResolutionTerm> out;
    for (auto& t : bgg_complex(G, lambda, N))
        if (t.label == m) out.push_back(std::move(t));
    return out;
}

std::vector<ResolutionTerm> twisted_bgg_complex(const WeylGroup& G, const WeylElt& x, const AffineWeight& lambda,
                                                int N) {
    std::vector<ResolutionTerm> out;
    for (const auto& rec : contributing_elements(G, lambda, N))
        out.push_back(make_term(G, rec, lambda, G.twisted_length(x, rec.element)));
    std::stable_sort(out.begin(), out.end(),
                     [](const ResolutionTerm& a, const ResolutionTerm& b) { return a.label < b.label; });
    return out;
}

std::vector<ResolutionTerm> twisted_bgg_terms(const WeylGroup& G, const WeylElt& x, const AffineWeight& lambda,
                                              int m, int N) {
    std::vector<ResolutionTerm> out;
    for (auto& t : twisted_bgg_complex(G, x, lambda, N))
        if (t.label == m) out.push_back(std::move(t));
    return out;
}

std::vector<ResolutionTerm> si_bgg_window(const WeylGroup& G, const AffineWeight& lambda, int mMin, int mMax,
                                          int N) {
    std::vector<ResolutionTerm> out;
    for (const auto& rec : contributing_elements(G, lambda, N))
        if (rec.siEll >= mMin && rec.siEll <= mMax) out.push_back(make_term(G, rec, lambda, rec.siEll));
    std::stable_sort(out.begin(), out.end(),
                     [](const ResolutionTerm& a, const ResolutionTerm& b) { return a.label < b.label; });
    return out;
}

Character euler_sum_serial(const WeylGroup& G, const std::vector<ResolutionTerm>& terms,
                           const AffineWeight& lambda, int N, int degreeShift) {
    const auto table = verma_char(G.cartan(), lambda, N).mult;
    Character acc = empty_char(lambda, N);
    for (const auto& t : terms) accumulate(G, table, t, lambda, N, degreeShift, acc);
    return acc;
}

Character euler_sum(const WeylGroup& G, const std::vector<ResolutionTerm>& terms, const AffineWeight& lambda,
                    int N, int degreeShift) {
    const auto table = verma_char(G.cartan(), lambda, N).mult;
    std::vector<Character> partial(omp_get_max_threads(), empty_char(lambda, N));
#pragma omp parallel for schedule(dynamic, 4)
    for (size_t i = 0; i < terms.size(); ++i)
        accumulate(G, table, terms[i], lambda, N, degreeShift, partial[omp_get_thread_num()]);
    Character acc = empty_char(lambda, N);
    for (const auto& p : partial) acc = acc + p;
    return acc;
}

EulerResult euler_check(const WeylGroup& G, const std::vector<ResolutionTerm>& terms, const AffineWeight& lambda,
                        int N, int expectedSign, int degreeShift) {
    EulerResult r;
    r.sum = euler_sum(G, terms, lambda, N, degreeShift);
    r.difference = r.sum - static_cast<long>(expectedSign) * simple_char_freudenthal(G.cartan(), lambda, N);
    for (const auto& [b, v] : r.difference.mult) r.offending.push_back(b);
    r.pass = r.difference.is_zero();
    return r;
}

LimitSchedule translation_schedule(const WeylGroup& G, const IVec& k, int length) {
    IVec neg = k;
    for (int& x : neg) x = -x;
    return {std::vector<WeylElt>(length, G.theta(neg))};
}

LimitResult limit_stabilization(const WeylGroup& G, const LimitSchedule& schedule, const WeylElt& v,
                                TranslationSide side) {
    LimitResult r;
    r.target = G.si_length(v);
    r.inNegativeCone = std::all_of(schedule.steps.begin(), schedule.steps.end(), [&](const WeylElt& w) {
        if (G.finite_part(w) != G.identity()) return false;
        IVec k = G.translation(w);
        for (int& x : k) x = -x;
        return G.in_q2_plus(k);
    });
    r.additive = true;
    WeylElt prod = G.identity();
    int lengthSum = 0;
    for (const auto& w : schedule.steps) {
        prod = G.mul(w, prod);
        lengthSum += G.length(w);
        if (G.length(prod) != lengthSum) r.additive = false;
        const WeylElt inv = G.inverse(prod);
        const WeylElt moved = side == TranslationSide::Left ? G.mul(inv, v) : G.mul(v, inv);
        r.trajectory.push_back(G.length(moved) - G.length(inv));
    }
    const int M = static_cast<int>(r.trajectory.size());
    int m0 = M + 1;
    while (m0 > 1 && r.trajectory[m0 - 2] == r.target) --m0;
    if (m0 <= M) {
        r.stabilized = true;
        r.m0 = m0;
    }
    return r;
}

}  // namespace affine
