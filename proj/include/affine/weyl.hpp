#pragma once
// Affine Weyl group elements, lengths, root sets and orders.
//
// An element is stored by its matrices on V' (Cartan values) and on V
// (coroot coordinates) together with the delta row needed to act on full
// weights. The V' matrix alone is faithful and serves as the key; the
// (finite part, translation) pair of W = T x| W-bar is derived from it.

#include "affine/cartan.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace affine {

struct WeylElt {
    IVec mv;    // (r+1)^2 row-major, action on V'
    IVec mc;    // (r+1)^2 row-major, action on V
    IVec drow;  // delta coefficient gains drow . m

    bool operator==(const WeylElt& o) const { return mv == o.mv; }
    bool operator!=(const WeylElt& o) const { return mv != o.mv; }
    bool operator<(const WeylElt& o) const { return mv < o.mv; }
};

struct WeylEltHash {
    size_t operator()(const WeylElt& w) const noexcept {
        size_t h = 1469598103934665603ull;
        for (int x : w.mv) h = (h ^ static_cast<size_t>(x + 0x9e37)) * 1099511628211ull;
        return h;
    }
};

using Word = std::vector<int>;

struct LengthRecord {
    WeylElt element;
    Word word;
    int ell = 0;
    int siEll = 0;
};

enum class SiVerdict { Leq, NotLeq, Unstable };

/// Side on which the translations theta_lambda multiply in the stabilized
/// statements. Left is the stated form; only Right is consistent with the
/// sign convention of si_length (see README, "Known discrepancies").
enum class TranslationSide { Left, Right };

struct SiBruhatResult {
    SiVerdict verdict = SiVerdict::Unstable;
    IVec witness;  // lambda_0 in Q''+ coordinates when verdict is Leq
};

struct MaincombResult {
    bool ok = false;
    IVec mu0;            // in -Q''+, Q'' coordinates (nonpositive)
    int value = 0;       // si_length(w1) - si_length(w2)
    IVec violating_mu;   // first failing mu for the last candidate mu0
};

class WeylGroup {
public:
    explicit WeylGroup(AffineCartan C);

    const AffineCartan& cartan() const { return C_; }
    int rank() const { return C_.r; }

    WeylElt identity() const;
    WeylElt s(int i) const;
    WeylElt mul(const WeylElt& x, const WeylElt& y) const;  // x after y
    WeylElt inverse(const WeylElt& x) const;
    WeylElt from_word(const Word& w) const;  // s_{w[0]} s_{w[1]} ...

    AffineRoot apply(const WeylElt& w, const AffineRoot& y) const;  // on V
    IVec apply_prime(const WeylElt& w, const IVec& x) const;         // on V'
    AffineWeight apply(const WeylElt& w, const AffineWeight& x) const;
    AffineWeight dot(const WeylElt& w, const AffineWeight& x) const;

    /// s_h for a real coroot h, acting on V, V' and full weights.
    WeylElt reflection(const AffineRoot& h) const;
    WeylElt s_alpha_m(int fin_index, int m) const;

    /// theta_z for z given in the basis {dhat_i alpha_i, i = 1..r} of Q''.
    WeylElt theta(const IVec& k) const;
    /// The same transvection from a V' vector; throws if z is not in Q''.
    WeylElt theta_vector(const IVec& z) const;
    IVec q2_vector(const IVec& k) const;              // Q'' coordinates -> V'
    std::optional<IVec> q2_coords(const IVec& z) const;  // V' -> Q'' coordinates
    IVec translation(const WeylElt& w) const;          // Q'' coordinates
    WeylElt finite_part(const WeylElt& w) const;
    IVec finite_perm(const WeylElt& w) const;          // on C.fin_coroots
    WeylElt from_pair(const IVec& perm, const IVec& k) const;
    std::string format_pair(const WeylElt& w) const;   // "(perm; z)"

    bool is_left_descent(const WeylElt& w, int i) const;  // l(s_i w) < l(w)
    int length(const WeylElt& w) const;                   // root counting
    std::vector<AffineRoot> r_set(const WeylElt& w) const;  // sorted
    int si_length(const WeylElt& w) const;
    int twisted_length(const WeylElt& w, const WeylElt& u) const;
    Word reduced_word(const WeylElt& w) const;  // greedy, smallest index first

    /// Every element of length <= maxLen once, sorted by (length, word).
    std::vector<LengthRecord> enumerate(int maxLen) const;
    std::vector<LengthRecord> enumerate_serial(int maxLen) const;
    /// Elements reachable along length-increasing left multiplication while
    /// keep(w) holds; keep must be monotone along that order.
    std::vector<LengthRecord> enumerate_while(const std::function<bool(const WeylElt&)>& keep,
                                              int maxLen) const;

    bool bruhat_leq(const WeylElt& w, const WeylElt& w2) const;          // subword criterion
    bool bruhat_leq_lifting(const WeylElt& w, const WeylElt& w2) const;  // lifting property
    SiBruhatResult si_bruhat_leq(const WeylElt& w, const WeylElt& w2, int searchBound,
                                 TranslationSide side = TranslationSide::Left) const;
    MaincombResult maincomb_verify(const WeylElt& w1, const WeylElt& w2, int searchBound,
                                   TranslationSide side = TranslationSide::Left) const;
    /// theta_k w (Left) or w theta_k (Right).
    WeylElt translate(const IVec& k, const WeylElt& w, TranslationSide side) const;

    /// Q''+ is read as the dominant part of Q'': Q'' coordinates in
    /// [0, bound]^r whose image pairs nonnegatively with h_1..h_r. Ordered
    /// by total, then lexicographically.
    std::vector<IVec> q2_plus_box(int bound) const;
    bool in_q2_plus(const IVec& k) const;

    std::string format_word(const Word& w) const;  // "s0.s1" or "e"

private:
    int bound_for(const WeylElt& w) const;
    AffineCartan C_;
    int n_;
};

}  // namespace affine
