#pragma once
// Finite shadows of the semiregular module: the exponential action for
// abelian n, the comultiplication twist, the n+ action on an induced module,
// the filtration iteration, the DG elements, and a Koszul complex.
//
// All degrees here are absolute values of the (negative) n-degrees, so U(n)
// and U(n)* are graded by nonnegative integers.

#include "affine/lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affine {

/// Convention for the coadjoint-type bracket of x with f in U(h)*.
/// Reversed: [x, f](u) = f([u, x]).  Coadjoint: [x, f](u) = f([x, u]).
enum class BracketConvention { Reversed, Coadjoint };

/// U(h)* for a subalgebra h of n spanned by basis vectors, in the basis dual
/// to the PBW monomials of h. A functional is a UElt keyed by those monomials.
class DualModule {
public:
    DualModule(const Envelope& env, IVec basis);

    const IVec& basis() const { return basis_; }
    const std::vector<Word>& monomials(int d) const;
    /// (x . f_M)(u) = f_M(u x), for x in h.
    UElt act(int x, const Word& M) const;
    UElt act(int x, const UElt& f) const;
    /// [x, f_M] for x normalizing h.
    UElt bracket(int x, const Word& M, BracketConvention conv) const;
    UElt bracket(int x, const UElt& f, BracketConvention conv) const;

private:
    const Envelope* env_;
    IVec basis_;
    mutable std::map<int, std::vector<Word>> mono_;
};

// ---- exponential action (abelian n) --------------------------------------

/// U(g) (x) C[x_1..x_m]: (PBW monomial, exponent vector) -> coefficient.
/// The polynomial factor models U(n)* with e_i acting by d/dx_i.
using ExpVec = std::map<std::pair<Word, IVec>, Q>;

class ExpAction {
public:
    /// Requires n abelian.
    explicit ExpAction(const Envelope& env, int maxOrder = 64);

    /// ex(sum ad_{e_i} (x) x_i)(u) as (multi-index, coefficient in U(g)), a! divided out.
    std::vector<std::pair<IVec, UElt>> ex(const UElt& u) const;
    /// sigma(u)(v (x) p) = v ex(...)(u) p.
    ExpVec apply(const UElt& u, const ExpVec& vec) const;
    ExpVec left(int g, const ExpVec& vec) const;
    /// e_i . (v (x) p) = sign * v e_i (x) p + v (x) d_i p.
    ExpVec diagonal(int i, const ExpVec& vec, int sign = 1) const;
    std::string format(const ExpVec& v) const;

private:
    const Envelope* env_;
    int maxOrder_;
};

struct ExpReport {
    int homChecks = 0;
    int homOk = 0;         // sigma(u1 u2) = sigma(u2) o sigma(u1)
    int homLiteralOk = 0;  // sigma(u1 u2) = sigma(u1) o sigma(u2)
    int leftChecks = 0;
    int leftOk = 0;
    int diagChecks = 0;
    int diagOk = 0;       // diagonal action with sign +1
    int diagMinusOk = 0;  // diagonal action with sign -1
    std::string firstFailure;
};

/// Monomials u of length <= maxLen, samples v of length <= vLen, p of degree <= pDeg.
ExpReport exp_action_check(const Envelope& env, int maxLen, int vLen, int pDeg);

// ---- comultiplication ------------------------------------------------------

using Tensor2 = std::map<std::pair<Word, Word>, Q>;

Tensor2 coproduct(const Envelope& env, const Word& u);
/// Reversed word with sign (-1)^length, straightened.
UElt antipode(const Envelope& env, const Word& u);
/// phi(x (x) u) = sum x.u_(1) (x) u_(2), X = U(n) with right multiplication.
Tensor2 comult_phi(const Envelope& env, const Word& x, const Word& u);
Tensor2 comult_phi_inverse(const Envelope& env, const Word& x, const Word& u);

struct ComultReport {
    int checks = 0;
    int equivariant = 0;  // phi((x(x)u).e) = phi(x(x)u) . e for the twisted action
    int inverse = 0;      // both composites with the inverse are the identity
    int coassociative = 0;
    int algebraMap = 0;
    int pairChecks = 0;
    bool pass() const { return equivariant == checks && inverse == checks && coassociative == checks && algebraMap == pairChecks; }
};

/// Exhaustive over monomials x, u of n with deg x + deg u <= bound.
ComultReport comult_check(const Envelope& env, int bound);

// ---- n+ action on the induced module ---------------------------------------

/// n = plus (+) minus, minus an ideal, plus a subalgebra, PBW order plus first.
struct NpSplit {
    IVec plus, minus;
};

/// (U(n) word, dual monomial of U(n-)) -> coefficient; normal form has the
/// first factor a PBW monomial of U(n+).
using NpVec = std::map<std::pair<Word, Word>, Q>;

NpVec np_normalize(const Envelope& env, const NpSplit& s, const NpVec& v);
NpVec np_action(const Envelope& env, const NpSplit& s, int x, const NpVec& v, BracketConvention conv);
NpVec np_minus_action(const Envelope& env, const NpSplit& s, int y, const NpVec& v);

struct NpReport {
    int relationChecks = 0;
    int relationOk = 0;
    int commutatorChecks = 0;
    int commutatorOk = 0;     // [x-action, y-action] = [x,y]-action
    int commutatorNegOk = 0;  // ... = -[x,y]-action
    std::string firstFailure;
};

NpReport np_check(const Envelope& env, const NpSplit& s, int bound, BracketConvention conv);

// ---- filtration iteration --------------------------------------------------

struct IterateStep {
    IVec F, next, complement;
    bool ideal = false, abelian = false;
    bool moduleOk = false;   // the tensor-product formula defines an F-module
    bool bijective = false;  // psi(m)(u) = eps(u.m) is bijective degreewise
};

struct IterateReport {
    bool pass = false;
    bool hypotheses = false;
    bool dimsEqual = false;
    std::vector<IterateStep> steps;
    std::vector<long> dimS, dimIterated;  // index = degree
    std::string failure;
};

/// Lower central series; non-abelian quotients are refined one basis vector
/// at a time in index order. Ends with the empty subalgebra.
std::vector<IVec> default_filtration(const Envelope& env);
IterateReport iterate_check(const Envelope& env, const std::vector<IVec>& filtration, int bound,
                            BracketConvention conv = BracketConvention::Coadjoint);

// ---- DG elements -----------------------------------------------------------

struct DgReport {
    // D^2 = 0 on the samples; A with the corrected -l sign, and literally.
    bool squareA = false, squareALiteral = false, squareB = false;
    bool nestedA = false, nestedB = false;  // {D,{D,a}} = 0 for generators a
    bool sigmaIdentity = false;             // theta(D1_B) = -D1_B
    bool traceTerm = false;                 // sum_j c_ij^j = 0 for every i
    bool remarkSum = false;                 // sum_{i,j} c_ij^k = 0 for every k
    bool transport = false;                 // eta theta(D2_B) = -D2_A, corrected A
    bool transportLiteral = false;          // same with the literal D_A
    int samples = 0;
    std::string witness;
    bool pass() const { return squareA && squareB && nestedA && nestedB && sigmaIdentity && transport; }
};

DgReport dg_checks(const Envelope& env, int bound);

// ---- Koszul complex ----------------------------------------------------------

struct KoszulReport {
    bool squareZero = false;
    bool concentrated = false;                // only H_{dim n} at the lowest weight, of dimension 1
    std::map<std::pair<int, int>, int> homology;  // (Lambda degree, weight) -> dim, nonzero entries
};

/// Chevalley-Eilenberg chains Lambda(n) (x) U(n)*, every weight up to bound.
KoszulReport koszul_tor(const Envelope& env, int bound);

}  // namespace affine
