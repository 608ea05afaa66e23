#pragma once
// Height-truncated formal characters.
//
// A character is stored relative to a ceiling weight: the term at offset b
// is the weight base - sum_i b_i alpha_i with q-degree qShift - hgt(b), and
// every offset with hgt(b) <= N is known (absent means zero).

#include "affine/cartan.hpp"
#include "affine/weyl.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affine {

struct Character {
    AffineWeight base;
    int N = 0;
    int qShift = 0;
    std::map<IVec, long> mult;

    long at(const IVec& b) const;
    void add(const IVec& b, long v);
    bool is_zero() const { return mult.empty(); }
    int qdeg(const IVec& b) const { return qShift - hgt(b); }
};

/// Positive roots of the affine algebra with height <= maxHgt, in
/// alpha-coordinates, each with its multiplicity (1 for real roots, r for
/// the imaginary roots n delta).
std::vector<std::pair<IVec, int>> positive_roots(const AffineCartan& C, int maxHgt);

/// Throws std::invalid_argument unless both operands have equal base, N and qShift.
Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator*(long k, const Character& a);
bool operator==(const Character& a, const Character& b);

/// Drops offsets with hgt > n (n <= ch.N).
Character truncate(const Character& ch, int n);
/// Re-expresses ch against a higher ceiling; the result is known up to
/// height newN, which must not exceed ch.N + hgt(newBase - ch.base).
Character rebase(const AffineCartan& C, const Character& ch, const AffineWeight& newBase, int newN);

/// Graded dimension of U(n^-) placed under lambda.
Character verma_char(const AffineCartan& C, const AffineWeight& lambda, int N);
/// Alternating sum of Verma characters over the dot orbit.
Character simple_char_kac(const WeylGroup& G, const AffineWeight& lambda, int N);
/// Weight multiplicities from the Freudenthal recursion.
Character simple_char_freudenthal(const AffineCartan& C, const AffineWeight& lambda, int N);
/// Character of the twisted Verma module Phi_w(M(lambda)): ceiling w.lambda,
/// q-shift -hgt(lambda - w.lambda).
Character twisted_verma_char(const WeylGroup& G, const WeylElt& w, const AffineWeight& lambda, int N);
/// Limit of twisted Verma characters; all members of the system share the
/// Verma character, so this is verma_char.
Character wakimoto_char(const AffineCartan& C, const AffineWeight& lambda, int N);
/// Keeps the terms mu with (mu + rho, mu + rho) = (lambda + rho, lambda + rho).
Character linkage_filter(const AffineCartan& C, const Character& ch, const AffineWeight& lambda);

/// Elements w with hgt(lambda - w.lambda) <= N for dominant lambda, sorted
/// by (length, word).
std::vector<LengthRecord> contributing_elements(const WeylGroup& G, const AffineWeight& lambda, int N);

/// "b_0 ... b_r : mult : qdeg" per line, lexicographic in b.
std::string dump(const Character& ch);

}  // namespace affine
