#pragma once
// Untwisted affine Cartan data: marks, finite root data, weights carrying a
// delta coefficient, coroot-space vectors and the invariant form.
//
// Index convention: node 0 is the affine node, nodes 1..r the finite ones.
// Weights are stored by their values m_i = <h_i, lambda> plus the delta
// coefficient n, so alpha_j = (a_{0j}, ..., a_{rj}; [j == 0]).

#include "affine/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affine {

struct AffineWeight {
    IVec m;
    Q n = 0;

    AffineWeight operator+(const AffineWeight& o) const;
    AffineWeight operator-(const AffineWeight& o) const;
    AffineWeight operator*(int k) const;
    bool operator==(const AffineWeight& o) const { return m == o.m && n == o.n; }
};

/// Integer vector in the coroot space V, in the basis h_0..h_r.
using AffineRoot = IVec;
/// Coordinates b_i of a weight difference in the simple roots alpha_i.
using RootLatticeVector = IVec;

struct AffineCartan {
    int r = 0;  // finite rank
    IMat a;     // (r+1) x (r+1)
    IVec d, rr, rp, dhat;  // symmetrizer, left kernel r, right kernel r', D/d
    int D = 1;

    // Finite coroots in V (coordinate 0 is zero), sorted; with their images
    // h' in V' (Cartan-value vectors) and the W-invariant mark d_h.
    std::vector<AffineRoot> fin_coroots;
    std::vector<IVec> fin_coroot_prime;
    IVec fin_coroot_d;
    // Finite roots on the weight side in alpha-coordinates (length r+1,
    // entry 0 zero), sorted.
    std::vector<IVec> fin_roots;
    IVec theta;  // highest root, alpha-coordinates

    QMat fin_inv;       // inverse of (a_ij)_{i,j>=1}
    QMat fund_form;     // (omega_i, omega_j) for i,j >= 1, indexed from 0
    IMat sym;           // d_i a_ij; the form on simple roots is sym / D

    int size() const { return r + 1; }
    AffineRoot c() const { return rr; }
    bool is_positive_finite_coroot(const AffineRoot& h) const;
    int coroot_index(const AffineRoot& h) const;  // -1 if absent
    std::string name;
};

/// Rejects matrices that are not irreducible untwisted affine.
AffineCartan solve_marks(const IMat& matrix);

/// Built-in types: A1..A4, B3, C2, C3, D4, G2 (all untwisted affine).
AffineCartan cartan_of_type(const std::string& type);
IMat affine_matrix_of_type(const std::string& type);
/// Plain-text integer grid, one row per line.
IMat parse_matrix(const std::string& text);

AffineWeight alpha(const AffineCartan& C, int i);
AffineWeight rho(const AffineCartan& C);
AffineWeight fundamental(const AffineCartan& C, int i);
/// Weight sum_i b_i alpha_i.
AffineWeight root_lattice_weight(const AffineCartan& C, const RootLatticeVector& b);

AffineWeight simple_reflection(const AffineCartan& C, int i, const AffineWeight& x);
AffineRoot simple_reflection(const AffineCartan& C, int i, const AffineRoot& y);

/// <y, x> for y in V and x given by Cartan values.
int pairing(const AffineRoot& y, const IVec& x);

Q level(const AffineCartan& C, const AffineWeight& x);
int hgt(const RootLatticeVector& b);
/// Solves lambda - mu = sum b_i alpha_i; throws std::domain_error
/// ("not in positive root cone") when b is non-integral or negative.
RootLatticeVector weight_diff(const AffineCartan& C, const AffineWeight& lambda,
                              const AffineWeight& mu);
/// Same solve without the sign requirement; nullopt when non-integral.
std::optional<IVec> root_lattice_coords(const AffineCartan& C, const AffineWeight& x);

Q invariant_form(const AffineCartan& C, const AffineWeight& x, const AffineWeight& y);
Q casimir_eigenvalue(const AffineCartan& C, const AffineWeight& nu);
/// D times the form on the root lattice (integer valued).
long form_root_lattice_scaled(const AffineCartan& C, const IVec& b1, const IVec& b2);

bool is_dominant(const AffineCartan& C, const AffineWeight& x, int k);

/// Membership test of Rem (i): alpha + dhat_alpha m c with alpha finite.
bool is_real_coroot(const AffineCartan& C, const AffineRoot& y);
/// Splits a real coroot into (finite coroot index, m).
std::pair<int, int> split_coroot(const AffineCartan& C, const AffineRoot& y);
AffineRoot make_coroot(const AffineCartan& C, int fin_index, int m);
bool is_positive(const IVec& v);
bool is_negative(const IVec& v);

/// "m0 m1 ... mr ; p/q"
std::string format_weight(const AffineWeight& x);
/// Accepts "m0,m1,...,mr[;n]" and the space-separated form above, plus the
/// shorthands "L0", "2L0", "Λ0", "L0+L1" for fundamental weights.
AffineWeight parse_weight(const AffineCartan& C, const std::string& text);

}  // namespace affine
