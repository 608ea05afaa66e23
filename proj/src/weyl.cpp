#include "affine/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <omp.h>

namespace affine {

namespace {

IVec mat_mul(const IVec& a, const IVec& b, int n) {
    IVec c(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const int x = a[i * n + k];
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += x * b[k * n + j];
        }
    return c;
}

IVec mat_vec(const IVec& a, const IVec& v, int n) {
    IVec out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += a[i * n + j] * v[j];
    return out;
}

IVec mat_t(const IVec& a, int n) {
    IVec t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j * n + i] = a[i * n + j];
    return t;
}

IVec eye(int n) {
    IVec m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

}  // namespace

WeylGroup::WeylGroup(AffineCartan C) : C_(std::move(C)), n_(C_.r + 1) {}

WeylElt WeylGroup::identity() const { return {eye(n_), eye(n_), IVec(n_, 0)}; }

WeylElt WeylGroup::s(int i) const {
    WeylElt w = identity();
    for (int k = 0; k < n_; ++k) {
        w.mv[k * n_ + i] -= C_.a[k][i];  // x - x_i alpha_i
        w.mc[i * n_ + k] -= C_.a[k][i];  // y - <y, alpha_i> h_i
    }
    if (i == 0) w.drow[0] = -1;
    return w;
}

WeylElt WeylGroup::mul(const WeylElt& x, const WeylElt& y) const {
    WeylElt z{mat_mul(x.mv, y.mv, n_), mat_mul(x.mc, y.mc, n_), y.drow};
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) z.drow[j] += x.drow[k] * y.mv[k * n_ + j];
    return z;
}

WeylElt WeylGroup::inverse(const WeylElt& x) const {
    WeylElt z{mat_t(x.mc, n_), mat_t(x.mv, n_), IVec(n_, 0)};
    for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) z.drow[j] -= x.drow[k] * z.mv[k * n_ + j];
    return z;
}

WeylElt WeylGroup::from_word(const Word& w) const {
    WeylElt x = identity();
    for (int i : w) x = mul(x, s(i));
    return x;
}

AffineRoot WeylGroup::apply(const WeylElt& w, const AffineRoot& y) const { return mat_vec(w.mc, y, n_); }

IVec WeylGroup::apply_prime(const WeylElt& w, const IVec& x) const { return mat_vec(w.mv, x, n_); }

AffineWeight WeylGroup::apply(const WeylElt& w, const AffineWeight& x) const {
    return {mat_vec(w.mv, x.m, n_), x.n + pairing(w.drow, x.m)};
}

AffineWeight WeylGroup::dot(const WeylElt& w, const AffineWeight& x) const {
    const AffineWeight r = rho(C_);
    return apply(w, x + r) - r;
}

WeylElt WeylGroup::reflection(const AffineRoot& h) const {
    auto [idx, m] = split_coroot(C_, h);
    if (idx < 0) throw std::invalid_argument("not a real coroot");
    const IVec& hp = C_.fin_coroot_prime[idx];
    WeylElt w = identity();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            w.mv[i * n_ + j] -= hp[i] * h[j];
            w.mc[i * n_ + j] -= h[i] * hp[j];
        }
    for (int j = 0; j < n_; ++j) w.drow[j] = -m * h[j];
    return w;
}

WeylElt WeylGroup::s_alpha_m(int fin_index, int m) const { return reflection(make_coroot(C_, fin_index, m)); }

IVec WeylGroup::q2_vector(const IVec& k) const {
    IVec z(n_, 0);
    for (int i = 1; i < n_; ++i)
        for (int row = 0; row < n_; ++row) z[row] += k[i - 1] * C_.dhat[i] * C_.a[row][i];
    return z;
}

std::optional<IVec> WeylGroup::q2_coords(const IVec& z) const {
    IVec k(C_.r, 0);
    for (int j = 1; j < n_; ++j) {
        Q y = 0;
        for (int i = 1; i < n_; ++i) y += C_.fin_inv[j - 1][i - 1] * z[i];
        y /= C_.dhat[j];
        if (y.get_den() != 1) return std::nullopt;
        k[j - 1] = static_cast<int>(y.get_num().get_si());
    }
    if (q2_vector(k) != z) return std::nullopt;
    return k;
}

WeylElt WeylGroup::theta(const IVec& k) const {
    const IVec z = q2_vector(k);
    WeylElt w = identity();
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            w.mv[i * n_ + j] += z[i] * C_.rr[j];
            w.mc[i * n_ + j] -= C_.rr[i] * z[j];
        }
    // Half the squared length of z, using (dhat_i alpha_i, dhat_j alpha_j) = dhat_i dhat_j d_i a_ij / D.
    long twice = 0;
    for (int i = 1; i < n_; ++i)
        for (int j = 1; j < n_; ++j) twice += static_cast<long>(k[i - 1]) * k[j - 1] * C_.dhat[j] * C_.a[i][j];
    const int half = static_cast<int>(twice / 2);
    for (int j = 0; j < n_; ++j) w.drow[j] = -half * C_.rr[j] - (j > 0 ? k[j - 1] : 0);
    return w;
}

WeylElt WeylGroup::theta_vector(const IVec& z) const {
    auto k = q2_coords(z);
    if (!k) throw std::invalid_argument("vector is not in the lattice Q''");
    return theta(*k);
}

IVec WeylGroup::translation(const WeylElt& w) const {
    IVec z(n_);
    for (int i = 0; i < n_; ++i) z[i] = w.mv[i * n_] - (i == 0 ? 1 : 0);
    auto k = q2_coords(z);
    if (!k) throw std::logic_error("translation part outside Q''");
    return *k;
}

WeylElt WeylGroup::finite_part(const WeylElt& w) const {
    IVec k = translation(w);
    for (int& x : k) x = -x;
    return mul(theta(k), w);
}

IVec WeylGroup::finite_perm(const WeylElt& w) const {
    const WeylElt f = finite_part(w);
    IVec perm;
    for (const auto& h : C_.fin_coroots) perm.push_back(C_.coroot_index(apply(f, h)));
    return perm;
}

WeylElt WeylGroup::from_pair(const IVec& perm, const IVec& k) const {
    if (perm.size() != C_.fin_coroots.size()) throw std::invalid_argument("permutation has wrong size");
    QMat mc(n_, QVec(n_, 0));
    IVec col0 = C_.rr;
    for (int i = 1; i < n_; ++i) {
        AffineRoot h(n_, 0);
        h[i] = 1;
        const int p = perm[C_.coroot_index(h)];
        if (p < 0 || p >= static_cast<int>(perm.size())) throw std::invalid_argument("bad permutation entry");
        const AffineRoot& img = C_.fin_coroots[p];
        for (int row = 0; row < n_; ++row) {
            mc[row][i] = img[row];
            col0[row] -= C_.rr[i] * img[row];
        }
    }
    for (int row = 0; row < n_; ++row) mc[row][0] = col0[row];
    QMat mv = transpose(affine::inverse(mc));
    WeylElt f{IVec(n_ * n_), IVec(n_ * n_), IVec(n_, 0)};
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (mv[i][j].get_den() != 1) throw std::invalid_argument("not a finite Weyl group element");
            f.mv[i * n_ + j] = static_cast<int>(mv[i][j].get_num().get_si());
            f.mc[i * n_ + j] = static_cast<int>(mc[i][j].get_num().get_si());
        }
    for (size_t p = 0; p < perm.size(); ++p)
        if (C_.coroot_index(apply(f, C_.fin_coroots[p])) != perm[p])
            throw std::invalid_argument("permutation is not induced by a linear map");
    WeylElt g = f;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i < n_; ++i)
            if (is_left_descent(g, i)) {
                g = mul(s(i), g);
                moved = true;
                break;
            }
    }
    if (g != identity()) throw std::invalid_argument("permutation is not in the finite Weyl group");
    return mul(theta(k), f);
}

std::string WeylGroup::format_pair(const WeylElt& w) const {
    return "(" + join(finite_perm(w)) + "; " + join(translation(w)) + ")";
}

bool WeylGroup::is_left_descent(const WeylElt& w, int i) const {
    // w^{-1}(h_i) is row i of the V' matrix read as a vector in V.
    IVec v(w.mv.begin() + i * n_, w.mv.begin() + (i + 1) * n_);
    return is_negative(v);
}

int WeylGroup::bound_for(const WeylElt& w) const {
    int b = 0;
    for (const auto& h : C_.fin_coroots) {
        int x = 0, y = 0;
        for (int j = 0; j < n_; ++j) {
            x += w.mc[j] * h[j];           // (w h)_0
            y += w.mv[j * n_] * h[j];      // (w^{-1} h)_0
        }
        b = std::max({b, std::abs(x), std::abs(y)});
    }
    return b + 1;
}

int WeylGroup::length(const WeylElt& w) const {
    const WeylElt wi = inverse(w);
    const int B = bound_for(w);
    int count = 0;
    for (size_t p = 0; p < C_.fin_coroots.size(); ++p) {
        const bool pos = is_positive(C_.fin_coroots[p]);
        for (int m = pos ? 0 : 1; m <= B; ++m)
            if (is_negative(apply(wi, make_coroot(C_, static_cast<int>(p), m)))) ++count;
    }
    return count;
}

std::vector<AffineRoot> WeylGroup::r_set(const WeylElt& w) const {
    const int B = bound_for(w);
    std::vector<AffineRoot> out;
    for (size_t p = 0; p < C_.fin_coroots.size(); ++p) {
        const bool neg = is_negative(C_.fin_coroots[p]);
        for (int m = neg ? 0 : -1; m >= -B; --m) {
            AffineRoot a = make_coroot(C_, static_cast<int>(p), m);
            if (is_positive(apply(w, a))) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int WeylGroup::si_length(const WeylElt& w) const {
    const int B = bound_for(w);
    int plus = 0, minus = 0;
    for (size_t p = 0; p < C_.fin_coroots.size(); ++p) {
        const bool pos = is_positive(C_.fin_coroots[p]);
        for (int m = pos ? 0 : 1; m <= B; ++m) {
            if (!is_negative(apply(w, make_coroot(C_, static_cast<int>(p), m)))) continue;
            (pos ? plus : minus) += 1;
        }
    }
    return plus - minus;
}

int WeylGroup::twisted_length(const WeylElt& w, const WeylElt& u) const {
    const WeylElt wi = inverse(w);
    return length(mul(wi, u)) - length(wi);
}

Word WeylGroup::reduced_word(const WeylElt& w) const {
    Word word;
    WeylElt x = w;
    const WeylElt e = identity();
    while (x != e) {
        int i = 0;
        while (!is_left_descent(x, i)) ++i;
        word.push_back(i);
        x = mul(s(i), x);
    }
    return word;
}

namespace {

struct Ball {
    std::vector<std::vector<WeylElt>> levels;
    std::unordered_map<WeylElt, Word, WeylEltHash> words;
};

void assign_words(const WeylGroup& G, Ball& ball, std::vector<WeylElt>& level,
                  const std::unordered_set<WeylElt, WeylEltHash>& prev, bool parallel) {
    std::vector<Word> words(level.size());
    const int n = G.rank() + 1;
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (size_t t = 0; t < level.size(); ++t) {
        for (int i = 0; i < n; ++i) {
            WeylElt p = G.mul(G.s(i), level[t]);
            if (prev.count(p)) {
                words[t] = {i};
                const Word& tail = ball.words.at(p);
                words[t].insert(words[t].end(), tail.begin(), tail.end());
                break;
            }
        }
    }
    std::vector<size_t> order(level.size());
    for (size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return words[a] < words[b]; });
    std::vector<WeylElt> sorted;
    for (size_t t : order) {
        ball.words.emplace(level[t], words[t]);
        sorted.push_back(level[t]);
    }
    level = std::move(sorted);
}

std::vector<LengthRecord> bfs_ball(const WeylGroup& G, int maxLen, bool parallel) {
    Ball ball;
    const WeylElt e = G.identity();
    ball.levels.push_back({e});
    ball.words[e] = {};
    const int n = G.rank() + 1;
    std::unordered_set<WeylElt, WeylEltHash> before, current{e};
    for (int k = 0; k < maxLen; ++k) {
        const auto& cur = ball.levels.back();
        std::vector<std::vector<WeylElt>> found(parallel ? omp_get_max_threads() : 1);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
        for (size_t t = 0; t < cur.size(); ++t) {
            auto& out = found[parallel ? omp_get_thread_num() : 0];
            for (int i = 0; i < n; ++i) {
                WeylElt x = G.mul(G.s(i), cur[t]);
                if (!before.count(x)) out.push_back(std::move(x));
            }
        }
        std::unordered_set<WeylElt, WeylEltHash> next;
        std::vector<WeylElt> level;
        for (auto& part : found)
            for (auto& x : part)
                if (next.insert(x).second) level.push_back(x);
        assign_words(G, ball, level, current, parallel);
        ball.levels.push_back(std::move(level));
        before = std::move(current);
        current = std::move(next);
    }
    std::vector<LengthRecord> out;
    for (size_t k = 0; k < ball.levels.size(); ++k)
        for (const auto& w : ball.levels[k]) out.push_back({w, ball.words.at(w), static_cast<int>(k), 0});
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (size_t t = 0; t < out.size(); ++t) out[t].siEll = G.si_length(out[t].element);
    return out;
}

}  // namespace

std::vector<LengthRecord> WeylGroup::enumerate(int maxLen) const { return bfs_ball(*this, maxLen, true); }

std::vector<LengthRecord> WeylGroup::enumerate_serial(int maxLen) const { return bfs_ball(*this, maxLen, false); }

std::vector<LengthRecord> WeylGroup::enumerate_while(const std::function<bool(const WeylElt&)>& keep,
                                                     int maxLen) const {
    std::vector<LengthRecord> out;
    const WeylElt e = identity();
    if (!keep(e)) return out;
    std::unordered_map<WeylElt, Word, WeylEltHash> words{{e, {}}};
    std::vector<WeylElt> cur{e};
    out.push_back({e, {}, 0, 0});
    for (int k = 0; !cur.empty() && (maxLen < 0 || k < maxLen); ++k) {
        std::vector<WeylElt> next;
        std::unordered_set<WeylElt, WeylEltHash> seen;
        for (const auto& w : cur)
            for (int i = 0; i < n_; ++i) {
                if (is_left_descent(w, i)) continue;
                WeylElt x = mul(s(i), w);
                if (seen.count(x) || !keep(x)) continue;
                seen.insert(x);
                next.push_back(x);
            }
        std::vector<std::pair<Word, WeylElt>> tagged;
        for (const auto& x : next) {
            int i = 0;
            while (!is_left_descent(x, i)) ++i;
            Word word{i};
            const Word& tail = words.at(mul(s(i), x));
            word.insert(word.end(), tail.begin(), tail.end());
            tagged.emplace_back(word, x);
        }
        std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        cur.clear();
        for (auto& [word, x] : tagged) {
            words[x] = word;
            cur.push_back(x);
            out.push_back({x, word, k + 1, 0});
        }
    }
    for (auto& rec : out) rec.siEll = si_length(rec.element);
    return out;
}

bool WeylGroup::bruhat_leq(const WeylElt& w, const WeylElt& w2) const {
    std::unordered_set<WeylElt, WeylEltHash> sub{identity()};
    for (int i : reduced_word(w2)) {
        std::vector<WeylElt> add;
        const WeylElt si = s(i);
        for (const auto& x : sub) add.push_back(mul(x, si));
        for (auto& x : add) sub.insert(std::move(x));
    }
    return sub.count(w) > 0;
}

bool WeylGroup::bruhat_leq_lifting(const WeylElt& w, const WeylElt& w2) const {
    WeylElt x = w, y = w2;
    int lx = length(x), ly = length(y);
    const WeylElt e = identity();
    while (true) {
        if (lx > ly) return false;
        if (y == e) return x == e;
        int i = 0;
        while (!is_left_descent(y, i)) ++i;
        y = mul(s(i), y);
        --ly;
        if (is_left_descent(x, i)) {
            x = mul(s(i), x);
            --lx;
        }
    }
}

std::vector<IVec> WeylGroup::q2_plus_box(int bound) const {
    std::vector<IVec> out;
    IVec v(C_.r, 0);
    while (true) {
        if (in_q2_plus(v)) out.push_back(v);
        int i = 0;
        while (i < C_.r && v[i] == bound) v[i++] = 0;
        if (i == C_.r) break;
        ++v[i];
    }
    std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
        const int sa = hgt(a), sb = hgt(b);
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

WeylElt WeylGroup::translate(const IVec& k, const WeylElt& w, TranslationSide side) const {
    return side == TranslationSide::Left ? mul(theta(k), w) : mul(w, theta(k));
}

bool WeylGroup::in_q2_plus(const IVec& k) const {
    const IVec z = q2_vector(k);
    return std::all_of(z.begin() + 1, z.end(), [](int x) { return x >= 0; });
}

SiBruhatResult WeylGroup::si_bruhat_leq(const WeylElt& w, const WeylElt& w2, int searchBound,
                                        TranslationSide side) const {
    if (searchBound < 1) throw std::invalid_argument("searchBound must be at least 1");
    const auto box = q2_plus_box(searchBound);
    auto cmp = [&](const IVec& l0, const IVec& l) {
        IVec t = l0;
        for (size_t i = 0; i < t.size(); ++i) t[i] += l[i];
        return bruhat_leq(translate(t, w, side), translate(t, w2, side));
    };
    for (const auto& l0 : box) {
        bool all = true;
        for (const auto& l : box)
            if (!cmp(l0, l)) {
                all = false;
                break;
            }
        if (all) return {SiVerdict::Leq, l0};
    }
    const IVec far(C_.r, searchBound);
    for (const auto& l : box)
        if (cmp(far, l)) return {SiVerdict::Unstable, {}};
    return {SiVerdict::NotLeq, {}};
}

MaincombResult WeylGroup::maincomb_verify(const WeylElt& w1, const WeylElt& w2, int searchBound,
                                          TranslationSide side) const {
    MaincombResult res;
    res.value = si_length(w1) - si_length(w2);
    const auto box = q2_plus_box(searchBound);
    for (const auto& p0 : box) {
        bool all = true;
        for (const auto& p : box) {
            IVec t = p0;
            for (size_t i = 0; i < t.size(); ++i) t[i] += p[i];
            if (length(translate(t, w1, side)) - length(translate(t, w2, side)) != res.value) {
                all = false;
                res.violating_mu = p;
                for (int& x : res.violating_mu) x = -x;
                break;
            }
        }
        if (all) {
            res.ok = true;
            res.mu0 = p0;
            for (int& x : res.mu0) x = -x;
            res.violating_mu.clear();
            return res;
        }
    }
    return res;
}

std::string WeylGroup::format_word(const Word& w) const {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? "." : "") << 's' << w[i];
    return os.str();
}

}  // namespace affine
