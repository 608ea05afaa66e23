#pragma once
// The Clifford algebra of n + n* with pairing <e_i, e*_j> = delta_ij and
// relations w1 w2 + w2 w1 = <w1, w2>, its modules Stan (e*_i kill the
// generator) and Cost (e_i kill the generator), and the antiautomorphism
// reversing products.
//
// Monomials are normal ordered: e's ascending, then e*'s ascending. Subsets
// of {1..n} are bit masks with bit i-1 standing for index i.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affine {

using Mask = std::uint32_t;

struct CliffordElt {
    int n = 0;
    std::map<std::pair<Mask, Mask>, long> terms;  // (I, J) -> coefficient of e_I e*_J

    bool is_zero() const { return terms.empty(); }
    bool operator==(const CliffordElt& o) const { return n == o.n && terms == o.terms; }
    bool operator!=(const CliffordElt& o) const { return !(*this == o); }
};

constexpr int kCliffordMaxN = 12;

CliffordElt cl_zero(int n);
CliffordElt cl_one(int n);
CliffordElt cl_e(int n, int i);
CliffordElt cl_estar(int n, int i);
CliffordElt cl_monomial(int n, Mask I, Mask J);

CliffordElt operator+(const CliffordElt& a, const CliffordElt& b);
CliffordElt operator-(const CliffordElt& a, const CliffordElt& b);
CliffordElt operator*(long k, const CliffordElt& a);
CliffordElt multiply(const CliffordElt& x, const CliffordElt& y);

/// The automorphism e_i <-> e*_i.
CliffordElt swap_dual(const CliffordElt& x);
/// Reverses every product of generators.
CliffordElt sigma(const CliffordElt& x);

enum class CliffordModule { Stan, Cost };

/// Coordinates over the basis e_K (Stan) or e*_K (Cost), indexed by the mask K.
std::vector<long> act(const CliffordElt& x, const std::vector<long>& v, CliffordModule module);
/// M[J][K] = coefficient of the basis vector J in x . (basis vector K).
std::vector<std::vector<long>> module_matrix(const CliffordElt& x, CliffordModule module);

/// e_J e*_{1..n} e_I.
CliffordElt matrix_unit(int n, Mask I, Mask J);

struct MatrixUnitReport {
    int n = 0;
    int pairs = 0;
    int supportOk = 0;    // exactly one nonzero entry, at the stated position, of magnitude 1
    int literalOk = 0;    // the entry is +1
    int predictedOk = 0;  // Stan sign equals eps(I) (-1)^{n(n-1)/2}
    bool exactUpToSign() const { return supportOk == 2 * pairs; }
};

/// Checks both sign statements for the matrix units for every (I, J).
MatrixUnitReport matrix_unit_check(int n);

struct IdentResult {
    bool pass = false;
    bool faithful = false;  // alpha has rank 4^n
    std::string firstViolation;
};

/// gamma . beta . alpha = sigma on every basis monomial: the Cost matrix of
/// sigma(x) equals the transpose of the Stan matrix of x.
IdentResult ident_check(int n);

/// Signed monomial sum such as "+e1.e2.e*1-2*e*3"; "0" for zero, "+1" for the unit.
std::string format(const CliffordElt& x);

}  // namespace affine
