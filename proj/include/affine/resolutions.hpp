#pragma once
// Terms of the BGG, twisted BGG and semi-infinite BGG complexes at a height
// truncation, their Euler characteristics, and the stabilization of twisted
// lengths along a translation schedule.

#include "affine/charlib.hpp"
#include "affine/weyl.hpp"

#include <string>
#include <vector>

namespace affine {

struct ResolutionTerm {
    WeylElt w;
    Word word;
    int label = 0;      // the length value selecting the term: l(w), l^x(w) or l^{oo/2}(w)
    int homDegree = 0;  // -label for all three complexes
    AffineWeight weight;  // w . lambda
    int qShift = 0;       // -hgt(lambda - w . lambda)
};

/// Terms with l(w) = m.
std::vector<ResolutionTerm> bgg_terms(const WeylGroup& G, const AffineWeight& lambda, int m, int N);
std::vector<ResolutionTerm> bgg_complex(const WeylGroup& G, const AffineWeight& lambda, int N);

/// Terms M_x(v . lambda) with l^x(v) = m of B_x(lambda)[-l(x)].
std::vector<ResolutionTerm> twisted_bgg_terms(const WeylGroup& G, const WeylElt& x, const AffineWeight& lambda,
                                              int m, int N);
std::vector<ResolutionTerm> twisted_bgg_complex(const WeylGroup& G, const WeylElt& x, const AffineWeight& lambda,
                                                int N);

/// Wakimoto terms with l^{oo/2}(w) in [mMin, mMax].
std::vector<ResolutionTerm> si_bgg_window(const WeylGroup& G, const AffineWeight& lambda, int mMin, int mMax, int N);

/// sum over terms of (-1)^(homDegree + degreeShift) times the term character,
/// rebased under lambda.
Character euler_sum(const WeylGroup& G, const std::vector<ResolutionTerm>& terms, const AffineWeight& lambda,
                    int N, int degreeShift = 0);
Character euler_sum_serial(const WeylGroup& G, const std::vector<ResolutionTerm>& terms,
                           const AffineWeight& lambda, int N, int degreeShift = 0);

struct EulerResult {
    bool pass = false;
    Character sum;
    Character difference;  // sum - expectedSign * ch L(lambda)
    std::vector<IVec> offending;
};

EulerResult euler_check(const WeylGroup& G, const std::vector<ResolutionTerm>& terms, const AffineWeight& lambda,
                        int N, int expectedSign, int degreeShift = 0);

struct LimitSchedule {
    std::vector<WeylElt> steps;  // w_1, w_2, ...
};

/// Repeats theta_{-k} (k in Q''+ coordinates) `length` times.
LimitSchedule translation_schedule(const WeylGroup& G, const IVec& k, int length);

struct LimitResult {
    bool additive = false;       // l(w_m ... w_1) = l(w_1) + ... + l(w_m) for every prefix
    bool inNegativeCone = false;  // every step is theta_z with -z in Q''+
    bool stabilized = false;
    int m0 = -1;
    int target = 0;               // l^{oo/2}(v)
    std::vector<int> trajectory;  // index m-1 holds the value for the prefix w_m ... w_1
};

/// Left evaluates l^{W_m}(v) = l(W_m^{-1} v) - l(W_m^{-1}) as stated; Right
/// evaluates l(v W_m^{-1}) - l(W_m^{-1}).
LimitResult limit_stabilization(const WeylGroup& G, const LimitSchedule& schedule, const WeylElt& v,
                                TranslationSide side = TranslationSide::Left);

}  // namespace affine
