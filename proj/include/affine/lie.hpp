#pragma once
// Finite graded Lie algebras given by structure constants, and their
// enveloping algebras in a PBW basis with straightening.

#include "affine/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace affine {

using Word = std::vector<int>;
/// Element of U(g): PBW monomial (indices in PBW order) -> coefficient.
using UElt = std::map<Word, Q>;

struct GradedLieAlgebra {
    std::string name;
    std::vector<std::string> labels;
    IVec deg;
    std::vector<std::vector<std::map<int, Q>>> br;  // [x_i, x_j] = sum_k br[i][j][k] x_k
    IVec n_basis;  // the distinguished subalgebra n, as basis indices
    IVec b_basis;  // the complementary basis vectors

    int dim() const { return static_cast<int>(labels.size()); }
    const std::map<int, Q>& bracket(int i, int j) const { return br[i][j]; }
};

/// Brackets are given for unordered pairs; the antisymmetric partner is filled in.
struct BracketEntry {
    int i, j, k;
    Q c;
};
GradedLieAlgebra make_algebra(const std::string& name, const std::vector<std::string>& labels, const IVec& deg,
                              const std::vector<BracketEntry>& brackets, const IVec& n_basis);

/// Every violated hypothesis, as text; empty when the algebra is accepted.
std::vector<std::string> algebra_violations(const GradedLieAlgebra& L);
/// Throws std::invalid_argument naming the first violated hypothesis.
const GradedLieAlgebra& validate_algebra(const GradedLieAlgebra& L);

/// sl2, sl3, sl3-abelian, heisenberg, abelian1, abelian2.
GradedLieAlgebra builtin_algebra(const std::string& name);
/// Lines "deg i : d", "bracket i j : (k, c) (k, c) ..." and optionally
/// "n : i j ..." with 1-based indices; n defaults to the negative-degree basis.
GradedLieAlgebra parse_algebra(const std::string& text);

class Envelope {
public:
    /// PBW order: the b basis first, then the n basis, each in the given order.
    explicit Envelope(GradedLieAlgebra L);

    const GradedLieAlgebra& algebra() const { return L_; }
    int rank_of(int i) const { return rank_[i]; }

    UElt one() const { return {{Word{}, Q(1)}}; }
    UElt gen(int i) const { return {{Word{i}, Q(1)}}; }
    /// Product of generators in the given order, straightened.
    UElt word(const Word& w) const;
    UElt mul(const UElt& a, const UElt& b) const;
    UElt commutator(const UElt& a, const UElt& b) const;
    bool is_pbw(const Word& w) const;

    int abs_degree(const Word& w) const;  // sum of |deg|
    /// PBW monomials in the basis subset with sum of |deg| equal to d.
    std::vector<Word> monomials_of_degree(const IVec& basis, int d) const;
    /// PBW monomials in the basis subset of length <= len.
    std::vector<Word> monomials_up_to_length(const IVec& basis, int len) const;

    std::string format(const UElt& u) const;

private:
    GradedLieAlgebra L_;
    IVec rank_;
    IVec order_;  // order_[r] = index at PBW position r
    mutable std::map<Word, UElt> memo_;
};

void add_to(UElt& acc, const UElt& x, const Q& c = 1);
UElt scaled(const UElt& x, const Q& c);

}  // namespace affine
