#include "affine/semiregular.hpp"

#include "affine/clifford.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affine {

namespace {

template <class K>
void add_term(std::map<K, Q>& acc, const K& k, const Q& c) {
    if (c == 0) return;
    Q& t = acc[k];
    t += c;
    if (t == 0) acc.erase(k);
}

template <class K>
void add_all(std::map<K, Q>& acc, const std::map<K, Q>& x, const Q& c = 1) {
    for (const auto& [k, v] : x) add_term(acc, k, c * v);
}

Q coef(const UElt& u, const Word& w) {
    auto it = u.find(w);
    return it == u.end() ? Q(0) : it->second;
}

Word append(Word w, int x) {
    w.push_back(x);
    return w;
}

bool contains(const IVec& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

int absdeg(const Envelope& env, int x) { return std::abs(env.algebra().deg[x]); }

}  // namespace

// ---- DualModule ------------------------------------------------------------

DualModule::DualModule(const Envelope& env, IVec basis) : env_(&env), basis_(std::move(basis)) {}

const std::vector<Word>& DualModule::monomials(int d) const {
    auto it = mono_.find(d);
    if (it != mono_.end()) return it->second;
    return mono_.emplace(d, d < 0 ? std::vector<Word>{} : env_->monomials_of_degree(basis_, d)).first->second;
}

UElt DualModule::act(int x, const Word& M) const {
    UElt out;
    const int d = env_->abs_degree(M) - absdeg(*env_, x);
    for (const Word& m : monomials(d)) add_term(out, m, coef(env_->word(append(m, x)), M));
    return out;
}

UElt DualModule::act(int x, const UElt& f) const {
    UElt out;
    for (const auto& [M, c] : f) add_all(out, act(x, M), c);
    return out;
}

UElt DualModule::bracket(int x, const Word& M, BracketConvention conv) const {
    UElt out;
    const int d = env_->abs_degree(M) - absdeg(*env_, x);
    const Q s = conv == BracketConvention::Reversed ? 1 : -1;  // [u, x] versus [x, u]
    for (const Word& m : monomials(d)) {
        Word xm{x};
        xm.insert(xm.end(), m.begin(), m.end());
        const Q c = coef(env_->word(append(m, x)), M) - coef(env_->word(xm), M);
        add_term(out, m, s * c);
    }
    return out;
}

UElt DualModule::bracket(int x, const UElt& f, BracketConvention conv) const {
    UElt out;
    for (const auto& [M, c] : f) add_all(out, bracket(x, M, conv), c);
    return out;
}

// ---- exponential action ----------------------------------------------------

ExpAction::ExpAction(const Envelope& env, int maxOrder) : env_(&env), maxOrder_(maxOrder) {
    const auto& L = env.algebra();
    for (int a : L.n_basis)
        for (int b : L.n_basis)
            if (!L.bracket(a, b).empty()) throw std::invalid_argument("exponential action needs abelian n");
}

std::vector<std::pair<IVec, UElt>> ExpAction::ex(const UElt& u) const {
    const IVec& nb = env_->algebra().n_basis;
    const int m = static_cast<int>(nb.size());
    std::vector<std::pair<IVec, UElt>> out;
    std::map<IVec, UElt> layer;
    if (!u.empty()) layer[IVec(m, 0)] = u;
    for (int order = 0; !layer.empty(); ++order) {
        if (order > maxOrder_) throw std::overflow_error("exponential series exceeds the truncation order");
        std::map<IVec, UElt> next;
        for (const auto& [a, T] : layer) {
            Q fact = 1;
            for (int i = 0; i < m; ++i)
                for (int t = 2; t <= a[i]; ++t) fact *= t;
            out.emplace_back(a, scaled(T, 1 / fact));
            int last = 0;
            for (int i = 0; i < m; ++i)
                if (a[i] > 0) last = i;
            // ad_{e_i} commute, so extend only at or after the last used index
            for (int i = last; i < m; ++i) {
                UElt T2 = env_->commutator(env_->gen(nb[i]), T);
                if (T2.empty()) continue;
                IVec b = a;
                ++b[i];
                next[b] = std::move(T2);
            }
        }
        layer = std::move(next);
    }
    return out;
}

namespace {

ExpVec apply_terms(const Envelope& env, const std::vector<std::pair<IVec, UElt>>& terms, const ExpVec& vec) {
    ExpVec out;
    for (const auto& [key, c] : vec) {
        const auto& [v, b] = key;
        for (const auto& [a, T] : terms) {
            IVec e = b;
            for (size_t i = 0; i < e.size(); ++i) e[i] += a[i];
            for (const auto& [w, t] : env.mul({{v, Q(1)}}, T)) add_term(out, {w, e}, c * t);
        }
    }
    return out;
}

}  // namespace

ExpVec ExpAction::apply(const UElt& u, const ExpVec& vec) const { return apply_terms(*env_, ex(u), vec); }

ExpVec ExpAction::left(int g, const ExpVec& vec) const {
    ExpVec out;
    for (const auto& [key, c] : vec)
        for (const auto& [w, t] : env_->mul(env_->gen(g), {{key.first, Q(1)}})) add_term(out, {w, key.second}, c * t);
    return out;
}

ExpVec ExpAction::diagonal(int i, const ExpVec& vec, int sign) const {
    const int e = env_->algebra().n_basis[i];
    ExpVec out;
    for (const auto& [key, c] : vec) {
        const auto& [v, b] = key;
        for (const auto& [w, t] : env_->mul({{v, Q(1)}}, env_->gen(e))) add_term(out, {w, b}, sign * c * t);
        if (b[i] > 0) {
            IVec b2 = b;
            --b2[i];
            add_term(out, {v, b2}, c * b[i]);
        }
    }
    return out;
}

std::string ExpAction::format(const ExpVec& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    for (const auto& [key, c] : v) {
        os << (c < 0 ? "-" : "+");
        const Q a = c < 0 ? Q(-c) : c;
        if (a != 1) os << a.get_str() << "*";
        std::string v = key.first.empty() ? "1" : env_->format({{key.first, Q(1)}});
        if (v[0] == '+') v.erase(0, 1);
        os << v;
        for (size_t i = 0; i < key.second.size(); ++i)
            if (key.second[i]) os << "(x)x" << i + 1 << (key.second[i] > 1 ? "^" + std::to_string(key.second[i]) : "");
    }
    return os.str();
}

ExpReport exp_action_check(const Envelope& env, int maxLen, int vLen, int pDeg) {
    ExpAction S(env);
    const auto& L = env.algebra();
    IVec all(L.dim());
    for (int i = 0; i < L.dim(); ++i) all[i] = i;
    const int m = static_cast<int>(L.n_basis.size());
    std::vector<Word> us = env.monomials_up_to_length(all, maxLen);
    std::vector<ExpVec> samples;
    std::vector<IVec> exps{IVec(m, 0)};
    for (int d = 1; d <= pDeg; ++d) {
        std::vector<IVec> more;
        for (const auto& e : exps) {
            int s = 0;
            for (int x : e) s += x;
            if (s != d - 1) continue;
            int last = 0;
            for (int i = 0; i < m; ++i)
                if (e[i]) last = i;
            for (int i = last; i < m; ++i) {
                IVec f = e;
                ++f[i];
                more.push_back(f);
            }
        }
        exps.insert(exps.end(), more.begin(), more.end());
    }
    for (const Word& v : env.monomials_up_to_length(all, vLen))
        for (const IVec& e : exps) samples.push_back({{{v, e}, Q(1)}});

    std::map<Word, std::vector<std::pair<IVec, UElt>>> exCache;
    auto exOf = [&](const Word& u) -> const std::vector<std::pair<IVec, UElt>>& {
        auto it = exCache.find(u);
        if (it == exCache.end()) it = exCache.emplace(u, S.ex({{u, Q(1)}})).first;
        return it->second;
    };
    ExpReport r;
    auto note = [&](const std::string& s) {
        if (r.firstFailure.empty()) r.firstFailure = s;
    };
    for (const Word& u1 : us)
        for (const Word& u2 : us) {
            Word w = u1;
            w.insert(w.end(), u2.begin(), u2.end());
            const auto prod = S.ex(env.word(w));
            for (const auto& s : samples) {
                ++r.homChecks;
                const ExpVec lhs = apply_terms(env, prod, s);
                if (lhs == apply_terms(env, exOf(u2), apply_terms(env, exOf(u1), s)))
                    ++r.homOk;
                else
                    note("hom: " + env.format({{u1, Q(1)}}) + " " + env.format({{u2, Q(1)}}));
                if (lhs == apply_terms(env, exOf(u1), apply_terms(env, exOf(u2), s))) ++r.homLiteralOk;
            }
        }
    for (const Word& u : us)
        for (const auto& s : samples) {
            const auto& T = exOf(u);
            for (int g = 0; g < L.dim(); ++g) {
                ++r.leftChecks;
                if (apply_terms(env, T, S.left(g, s)) == S.left(g, apply_terms(env, T, s)))
                    ++r.leftOk;
                else
                    note("left: " + env.format({{u, Q(1)}}) + " by " + L.labels[g]);
            }
            for (int i = 0; i < m; ++i) {
                ++r.diagChecks;
                if (apply_terms(env, T, S.diagonal(i, s, 1)) == S.diagonal(i, apply_terms(env, T, s), 1))
                    ++r.diagOk;
                else
                    note("diagonal: " + env.format({{u, Q(1)}}));
                if (apply_terms(env, T, S.diagonal(i, s, -1)) == S.diagonal(i, apply_terms(env, T, s), -1))
                    ++r.diagMinusOk;
            }
        }
    return r;
}

// ---- comultiplication ------------------------------------------------------

Tensor2 coproduct(const Envelope& env, const Word& u) {
    Tensor2 cur{{{Word{}, Word{}}, Q(1)}};
    for (int x : u) {
        Tensor2 next;
        for (const auto& [ab, c] : cur) {
            for (const auto& [w, t] : env.word(append(ab.first, x))) add_term(next, {w, ab.second}, c * t);
            for (const auto& [w, t] : env.word(append(ab.second, x))) add_term(next, {ab.first, w}, c * t);
        }
        cur = std::move(next);
    }
    return cur;
}

UElt antipode(const Envelope& env, const Word& u) {
    Word r(u.rbegin(), u.rend());
    return scaled(env.word(r), u.size() % 2 ? -1 : 1);
}

Tensor2 comult_phi(const Envelope& env, const Word& x, const Word& u) {
    Tensor2 out;
    for (const auto& [ab, c] : coproduct(env, u)) {
        Word w = x;
        w.insert(w.end(), ab.first.begin(), ab.first.end());
        for (const auto& [y, t] : env.word(w)) add_term(out, {y, ab.second}, c * t);
    }
    return out;
}

Tensor2 comult_phi_inverse(const Envelope& env, const Word& x, const Word& u) {
    Tensor2 out;
    for (const auto& [ab, c] : coproduct(env, u))
        for (const auto& [y, t] : env.mul({{x, Q(1)}}, antipode(env, ab.first))) add_term(out, {y, ab.second}, c * t);
    return out;
}

namespace {

Tensor2 lin(const std::function<Tensor2(const Word&, const Word&)>& f, const Tensor2& v) {
    Tensor2 out;
    for (const auto& [xu, c] : v) add_all(out, f(xu.first, xu.second), c);
    return out;
}

using Tensor3 = std::map<std::array<Word, 3>, Q>;

}  // namespace

ComultReport comult_check(const Envelope& env, int bound) {
    const IVec& nb = env.algebra().n_basis;
    ComultReport r;
    auto phi = [&](const Word& x, const Word& u) { return comult_phi(env, x, u); };
    auto phiInv = [&](const Word& x, const Word& u) { return comult_phi_inverse(env, x, u); };
    for (int total = 0; total <= bound; ++total)
        for (int dx = 0; dx <= total; ++dx)
            for (const Word& x : env.monomials_of_degree(nb, dx))
                for (const Word& u : env.monomials_of_degree(nb, total - dx)) {
                    ++r.checks;
                    bool eq = true;
                    for (int e : nb) {
                        // (x (x) u).e = x (x) ue on the untwisted side
                        Tensor2 src;
                        for (const auto& [w, t] : env.word(append(u, e))) add_term(src, {x, w}, t);
                        Tensor2 lhs = lin(phi, src);
                        Tensor2 rhs;
                        for (const auto& [yw, c] : phi(x, u)) {
                            for (const auto& [y2, t] : env.word(append(yw.first, e))) add_term(rhs, {y2, yw.second}, c * t);
                            for (const auto& [w2, t] : env.word(append(yw.second, e))) add_term(rhs, {yw.first, w2}, c * t);
                        }
                        eq = eq && lhs == rhs;
                    }
                    if (eq) ++r.equivariant;
                    const Tensor2 id{{{x, u}, Q(1)}};
                    if (lin(phiInv, phi(x, u)) == id && lin(phi, phiInv(x, u)) == id) ++r.inverse;
                    if (x.empty() || true) {
                        // coassociativity of u, counted once per (x, u) pair for a uniform tally
                        Tensor3 left, right;
                        for (const auto& [ab, c] : coproduct(env, u)) {
                            for (const auto& [pq, t] : coproduct(env, ab.first))
                                add_term(left, {pq.first, pq.second, ab.second}, c * t);
                            for (const auto& [pq, t] : coproduct(env, ab.second))
                                add_term(right, {ab.first, pq.first, pq.second}, c * t);
                        }
                        if (left == right) ++r.coassociative;
                    }
                    // Delta(xu) = Delta(x) Delta(u)
                    ++r.pairChecks;
                    Word xu = x;
                    xu.insert(xu.end(), u.begin(), u.end());
                    Tensor2 lhs;
                    for (const auto& [w, t] : env.word(xu)) add_all(lhs, coproduct(env, w), t);
                    Tensor2 rhs;
                    for (const auto& [ab, c] : coproduct(env, x))
                        for (const auto& [pq, t] : coproduct(env, u)) {
                            Word a = ab.first, b = ab.second;
                            a.insert(a.end(), pq.first.begin(), pq.first.end());
                            b.insert(b.end(), pq.second.begin(), pq.second.end());
                            for (const auto& [wa, ca] : env.word(a))
                                for (const auto& [wb, cb] : env.word(b)) add_term(rhs, {wa, wb}, c * t * ca * cb);
                        }
                    if (lhs == rhs) ++r.algebraMap;
                }
    return r;
}

// ---- n+ action ---------------------------------------------------------------

namespace {

NpVec normalize_with(const Envelope& env, const NpSplit& s, const DualModule& dm, const NpVec& v) {
    NpVec out;
    for (const auto& [wm, c] : v)
        for (const auto& [w, t] : env.word(wm.first)) {
            size_t k = 0;
            while (k < w.size() && contains(s.plus, w[k])) ++k;
            UElt f{{wm.second, Q(1)}};
            for (size_t p = w.size(); p-- > k;) f = dm.act(w[p], f);
            const Word a(w.begin(), w.begin() + k);
            for (const auto& [M, q] : f) add_term(out, {a, M}, c * t * q);
        }
    return out;
}

NpVec plus_with(const Envelope& env, const NpSplit& s, const DualModule& dm, int x, const NpVec& v,
                BracketConvention conv) {
    NpVec raw;
    for (const auto& [wm, c] : v) {
        add_term(raw, {append(wm.first, x), wm.second}, c);
        for (const auto& [M, q] : dm.bracket(x, wm.second, conv)) add_term(raw, {wm.first, M}, c * q);
    }
    return normalize_with(env, s, dm, raw);
}

NpVec minus_with(const Envelope& env, const NpSplit& s, const DualModule& dm, int y, const NpVec& v) {
    NpVec out;
    for (const auto& [wm, c] : normalize_with(env, s, dm, v))
        for (const auto& [M, q] : dm.act(y, wm.second)) add_term(out, {wm.first, M}, c * q);
    return out;
}

}  // namespace

NpVec np_normalize(const Envelope& env, const NpSplit& s, const NpVec& v) {
    return normalize_with(env, s, DualModule(env, s.minus), v);
}

NpVec np_action(const Envelope& env, const NpSplit& s, int x, const NpVec& v, BracketConvention conv) {
    return plus_with(env, s, DualModule(env, s.minus), x, v, conv);
}

NpVec np_minus_action(const Envelope& env, const NpSplit& s, int y, const NpVec& v) {
    return minus_with(env, s, DualModule(env, s.minus), y, v);
}

NpReport np_check(const Envelope& env, const NpSplit& s, int bound, BracketConvention conv) {
    const auto& L = env.algebra();
    for (int x : s.plus)
        for (int y : s.minus)
            if (env.rank_of(x) > env.rank_of(y)) throw std::invalid_argument("PBW order must put n+ first");
    for (int x : s.plus)
        for (int y : s.minus)
            for (const auto& [k, c] : L.bracket(x, y))
                if (!contains(s.minus, k)) throw std::invalid_argument("n- is not an ideal");
    DualModule dm(env, s.minus);
    NpReport r;
    auto note = [&](const std::string& t) {
        if (r.firstFailure.empty()) r.firstFailure = t;
    };
    for (int total = 0; total <= bound; ++total)
        for (int da = 0; da <= total; ++da)
            for (const Word& a : env.monomials_of_degree(s.plus, da))
                for (const Word& M : dm.monomials(total - da)) {
                    const NpVec v{{{a, M}, Q(1)}};
                    for (int x : s.plus) {
                        for (int y : s.minus) {
                            ++r.relationChecks;
                            NpVec rep1{{{append(a, y), M}, Q(1)}};
                            NpVec rep2;
                            for (const auto& [M2, q] : dm.act(y, M)) add_term(rep2, {a, M2}, q);
                            if (plus_with(env, s, dm, x, rep1, conv) == plus_with(env, s, dm, x, rep2, conv))
                                ++r.relationOk;
                            else
                                note("relation: " + L.labels[x] + " on " + env.format({{a, Q(1)}}) + "." + L.labels[y]);

                            ++r.commutatorChecks;
                            NpVec lhs = plus_with(env, s, dm, x, minus_with(env, s, dm, y, v), conv);
                            add_all(lhs, minus_with(env, s, dm, y, plus_with(env, s, dm, x, v, conv)), -1);
                            NpVec rhs;
                            for (const auto& [k, c] : L.bracket(x, y)) add_all(rhs, minus_with(env, s, dm, k, v), c);
                            if (lhs == rhs)
                                ++r.commutatorOk;
                            else
                                note("commutator: " + L.labels[x] + "," + L.labels[y]);
                            NpVec neg;
                            add_all(neg, rhs, -1);
                            if (lhs == neg) ++r.commutatorNegOk;
                        }
                    }
                }
    return r;
}

// ---- filtration iteration --------------------------------------------------

std::vector<IVec> default_filtration(const Envelope& env) {
    const auto& L = env.algebra();
    IVec C = L.n_basis;
    std::sort(C.begin(), C.end());
    std::vector<IVec> out;
    while (!C.empty()) {
        std::set<int> coords;
        QMat vecs;
        for (int x : L.n_basis)
            for (int y : C) {
                const auto& b = L.bracket(x, y);
                if (b.empty()) continue;
                QVec v(L.dim(), 0);
                for (const auto& [k, c] : b) {
                    v[k] = c;
                    coords.insert(k);
                }
                vecs.push_back(v);
            }
        if (!vecs.empty() && rank(vecs) != static_cast<int>(coords.size()))
            throw std::invalid_argument("lower central series is not spanned by basis vectors");
        IVec next(coords.begin(), coords.end());
        if (next == C) throw std::invalid_argument("n is not nilpotent");
        IVec comp;
        for (int x : C)
            if (!contains(next, x)) comp.push_back(x);
        std::stable_sort(comp.begin(), comp.end(), [&](int a, int b) { return absdeg(env, a) < absdeg(env, b); });
        bool abelian = true;
        for (int a : comp)
            for (int b : comp) abelian = abelian && L.bracket(a, b).empty();
        out.push_back(C);
        if (!abelian) {
            IVec F = C;
            for (size_t t = 0; t + 1 < comp.size(); ++t) {
                F.erase(std::find(F.begin(), F.end(), comp[t]));
                out.push_back(F);
            }
        }
        C = next;
    }
    out.push_back({});
    return out;
}

namespace {

using MVec = std::map<std::pair<Word, Word>, Q>;  // (U(F^{k+1})* monomial, U(n^k)* monomial)

}  // namespace

IterateReport iterate_check(const Envelope& env, const std::vector<IVec>& filtration, int bound,
                            BracketConvention conv) {
    const auto& L = env.algebra();
    IterateReport R;
    auto fail = [&](const std::string& s) {
        if (R.failure.empty()) R.failure = s;
    };
    auto sameSet = [](IVec a, IVec b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    R.hypotheses = true;
    if (filtration.empty() || !sameSet(filtration.front(), L.n_basis) || !filtration.back().empty()) {
        R.hypotheses = false;
        fail("filtration must run from n down to 0");
    }
    // graded dimensions
    R.dimS.assign(bound + 1, 0);
    for (int d = 0; d <= bound; ++d) R.dimS[d] = static_cast<long>(env.monomials_of_degree(L.n_basis, d).size());
    R.dimIterated.assign(bound + 1, 0);
    R.dimIterated[0] = 1;

    for (size_t k = 0; k + 1 < filtration.size(); ++k) {
        IterateStep st;
        st.F = filtration[k];
        st.next = filtration[k + 1];
        for (int x : st.F)
            if (!contains(st.next, x)) st.complement.push_back(x);
        bool subset = true;
        for (int x : st.next) subset = subset && contains(st.F, x);
        st.ideal = subset;
        for (int x : st.F)
            for (int y : st.next)
                for (const auto& [t, c] : L.bracket(x, y))
                    if (!contains(st.next, t)) st.ideal = false;
        st.abelian = true;
        for (int a : st.complement)
            for (int b : st.complement) st.abelian = st.abelian && L.bracket(a, b).empty();
        {
            std::vector<long> comp(bound + 1, 0), conv2(bound + 1, 0);
            for (int d = 0; d <= bound; ++d)
                comp[d] = static_cast<long>(env.monomials_of_degree(st.complement, d).size());
            for (int a = 0; a <= bound; ++a)
                for (int b = 0; a + b <= bound; ++b) conv2[a + b] += R.dimIterated[a] * comp[b];
            R.dimIterated = conv2;
        }
        const std::string tag = "step " + std::to_string(k) + ": ";
        if (!st.ideal) fail(tag + "F^{k+1} is not an ideal of F^k");
        if (!st.abelian) fail(tag + "complement is not abelian");
        if (!st.ideal || !st.abelian) {
            R.hypotheses = false;
            R.steps.push_back(st);
            continue;
        }
        DualModule dmNext(env, st.next), dmComp(env, st.complement), dmF(env, st.F);
        auto actM = [&](int x, const MVec& v) {
            MVec out;
            const bool inNext = contains(st.next, x);
            for (const auto& [pm, c] : v) {
                if (inNext) {
                    for (const auto& [M, q] : dmNext.act(x, pm.first)) add_term(out, {M, pm.second}, c * q);
                } else {
                    for (const auto& [M, q] : dmComp.act(x, pm.second)) add_term(out, {pm.first, M}, c * q);
                    for (const auto& [M, q] : dmNext.bracket(x, pm.first, conv)) add_term(out, {M, pm.second}, -c * q);
                }
            }
            return out;
        };
        auto basisM = [&](int d) {
            std::vector<std::pair<Word, Word>> out;
            for (int d1 = 0; d1 <= d; ++d1)
                for (const Word& a : dmNext.monomials(d1))
                    for (const Word& b : dmComp.monomials(d - d1)) out.push_back({a, b});
            return out;
        };
        st.moduleOk = true;
        st.bijective = true;
        for (int d = 0; d <= bound; ++d) {
            const auto B = basisM(d);
            for (const auto& m : B) {
                const MVec v{{m, Q(1)}};
                for (int x : st.F)
                    for (int y : st.F) {
                        if (x >= y) continue;
                        MVec lhs = actM(x, actM(y, v));
                        add_all(lhs, actM(y, actM(x, v)), -1);
                        MVec rhs;
                        for (const auto& [t, c] : L.bracket(x, y)) add_all(rhs, actM(t, v), c);
                        if (lhs != rhs) {
                            if (st.moduleOk) fail(tag + "module axiom fails for " + L.labels[x] + "," + L.labels[y]);
                            st.moduleOk = false;
                        }
                    }
            }
            const auto& U = dmF.monomials(d);
            QMat psi(U.size(), QVec(B.size(), 0));
            for (size_t j = 0; j < B.size(); ++j) {
                for (size_t i = 0; i < U.size(); ++i) {
                    MVec v{{B[j], Q(1)}};
                    for (size_t p = U[i].size(); p-- > 0;) v = actM(U[i][p], v);
                    auto it = v.find({Word{}, Word{}});
                    if (it != v.end()) psi[i][j] = it->second;
                }
            }
            const bool ok = U.size() == B.size() && (U.empty() || rank(psi) == static_cast<int>(U.size()));
            if (!ok) {
                if (st.bijective) fail(tag + "psi not bijective in degree " + std::to_string(d));
                st.bijective = false;
            }
        }
        R.steps.push_back(st);
    }
    R.dimsEqual = R.dimS == R.dimIterated;
    if (!R.dimsEqual)
        for (int d = 0; d <= bound; ++d)
            if (R.dimS[d] != R.dimIterated[d]) {
                fail("dimension mismatch in degree " + std::to_string(d));
                break;
            }
    bool steps = true;
    for (const auto& st : R.steps) steps = steps && st.moduleOk && st.bijective;
    R.pass = R.hypotheses && R.dimsEqual && steps;
    return R;
}

// ---- DG elements -----------------------------------------------------------

namespace {

using PKey = std::tuple<Word, Mask, Word>;
using PVec = std::map<PKey, Q>;
using ClMat = std::vector<std::vector<long>>;
using Op = std::function<PVec(const PVec&)>;

PVec apply_cl(const ClMat& m, const PVec& v) {
    PVec out;
    for (const auto& [k, c] : v) {
        const Mask K = std::get<1>(k);
        for (size_t J = 0; J < m.size(); ++J)
            if (m[J][K]) add_term(out, {std::get<0>(k), static_cast<Mask>(J), std::get<2>(k)}, c * m[J][K]);
    }
    return out;
}

long to_long(const Q& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::invalid_argument("structure constants must be integers here");
    return q.get_num().get_si();
}

struct DgModel {
    const Envelope& env;
    IVec nb;
    int m;
    std::vector<ClMat> E, Es;
    ClMat Cterm;
    CliffordElt C;
    DualModule dm;

    explicit DgModel(const Envelope& e) : env(e), nb(e.algebra().n_basis), m(static_cast<int>(nb.size())), dm(e, nb) {
        const auto& L = env.algebra();
        C = cl_zero(m);
        for (int i = 0; i < m; ++i) {
            E.push_back(module_matrix(cl_e(m, i + 1), CliffordModule::Stan));
            Es.push_back(module_matrix(cl_estar(m, i + 1), CliffordModule::Stan));
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (const auto& [k, c] : L.bracket(nb[i], nb[j])) {
                    const int kp = static_cast<int>(std::find(nb.begin(), nb.end(), k) - nb.begin());
                    C = C + to_long(c) * multiply(multiply(cl_estar(m, i + 1), cl_estar(m, j + 1)), cl_e(m, kp + 1));
                }
        Cterm = module_matrix(C, CliffordModule::Stan);
    }

    PVec rmul(int g, const PVec& v) const {
        PVec out;
        for (const auto& [k, c] : v)
            for (const auto& [w, t] : env.word(append(std::get<0>(k), g))) add_term(out, {w, std::get<1>(k), std::get<2>(k)}, c * t);
        return out;
    }
    // l_{e_i} on U(n)* (dual = true) or r_{e_i} on U(n)
    PVec third(int i, const PVec& v, bool dual) const {
        PVec out;
        for (const auto& [k, c] : v) {
            const UElt r = dual ? dm.act(nb[i], std::get<2>(k)) : env.word(append(std::get<2>(k), nb[i]));
            for (const auto& [w, t] : r) add_term(out, {std::get<0>(k), std::get<1>(k), w}, c * t);
        }
        return out;
    }
    PVec D(const PVec& v, bool dual, int sl) const {
        PVec out;
        for (int i = 0; i < m; ++i) {
            add_all(out, rmul(nb[i], apply_cl(Es[i], v)));
            add_all(out, apply_cl(Es[i], third(i, v, dual)), sl);
        }
        add_all(out, apply_cl(Cterm, v));
        return out;
    }
};

}  // namespace

DgReport dg_checks(const Envelope& env, int bound) {
    const auto& L = env.algebra();
    DgModel M(env);
    DgReport R;
    auto note = [&](const std::string& s) {
        if (R.witness.empty()) R.witness = s;
    };
    const int m = M.m;
    IVec all(L.dim());
    for (int i = 0; i < L.dim(); ++i) all[i] = i;

    auto samples = [&](bool dual) {
        (void)dual;
        std::vector<PVec> out;
        for (const Word& v : env.monomials_up_to_length(all, 1))
            for (Mask I = 0; I < (Mask(1) << m); ++I)
                for (int d = 0; d <= bound; ++d)
                    for (const Word& w : M.dm.monomials(d)) out.push_back({{{v, I, w}, Q(1)}});
        return out;
    };
    const auto SA = samples(true), SB = samples(false);
    R.samples = static_cast<int>(SA.size() + SB.size());

    auto squares = [&](const std::vector<PVec>& S, bool dual, int sl) {
        for (const auto& s : S)
            if (!M.D(M.D(s, dual, sl), dual, sl).empty()) return false;
        return true;
    };
    R.squareA = squares(SA, true, -1);
    R.squareALiteral = squares(SA, true, 1);
    R.squareB = squares(SB, false, 1);
    if (!R.squareA) note("D_A^2 != 0");
    if (!R.squareB) note("D_B^2 != 0");

    // {D,{D,a}} for generators a of each parity
    auto nested = [&](const std::vector<PVec>& S, bool dual, int sl) {
        std::vector<std::pair<Op, int>> gens;
        for (int g = 0; g < L.dim(); ++g) gens.push_back({[&, g](const PVec& v) { return M.rmul(g, v); }, 0});
        for (int i = 0; i < m; ++i) {
            gens.push_back({[&, i](const PVec& v) { return apply_cl(M.E[i], v); }, 1});
            gens.push_back({[&, i](const PVec& v) { return apply_cl(M.Es[i], v); }, 1});
            gens.push_back({[&, i, dual](const PVec& v) { return M.third(i, v, dual); }, 0});
        }
        Op D = [&, dual, sl](const PVec& v) { return M.D(v, dual, sl); };
        for (const auto& [a, par] : gens) {
            const int sa = par ? -1 : 1;  // (-1)^{|a|}
            Op Da = [&, sa](const PVec& v) {
                PVec out = D(a(v));
                add_all(out, a(D(v)), -sa);
                return out;
            };
            for (const auto& s : S) {
                PVec out = D(Da(s));
                add_all(out, Da(D(s)), sa);  // -(-1)^{|a|+1}
                if (!out.empty()) return false;
            }
        }
        return true;
    };
    R.nestedA = nested(SA, true, -1);
    R.nestedB = nested(SB, false, 1);
    if (!R.nestedA) note("{D_A,{D_A,a}} != 0");
    if (!R.nestedB) note("{D_B,{D_B,a}} != 0");

    // theta(D1) = -D1 with D1 = sum e_i (x) e*_i + C
    {
        std::map<Word, CliffordElt> D1, th;
        auto addc = [&](std::map<Word, CliffordElt>& acc, const Word& w, const CliffordElt& x) {
            auto it = acc.find(w);
            if (it == acc.end())
                acc.emplace(w, x);
            else
                it->second = it->second + x;
        };
        for (int i = 0; i < m; ++i) addc(D1, {M.nb[i]}, cl_estar(m, i + 1));
        addc(D1, {}, M.C);
        for (const auto& [w, x] : D1)
            for (const auto& [w2, t] : antipode(env, w)) addc(th, w2, to_long(t) * sigma(x));
        bool ok = true;
        for (const auto& [w, x] : D1) {
            auto it = th.find(w);
            ok = ok && it != th.end() && it->second == (-1) * x;
        }
        for (const auto& [w, x] : th) ok = ok && (D1.count(w) || x.is_zero());
        R.sigmaIdentity = ok;
        if (!ok) note("theta(D1) != -D1");
    }
    R.traceTerm = true;
    for (int i : M.nb) {
        Q s = 0;
        for (int j : M.nb) {
            auto it = L.bracket(i, j).find(j);
            if (it != L.bracket(i, j).end()) s += it->second;
        }
        R.traceTerm = R.traceTerm && s == 0;
    }
    R.remarkSum = true;
    for (int k : M.nb) {
        Q s = 0;
        for (int i : M.nb)
            for (int j : M.nb) {
                auto it = L.bracket(i, j).find(k);
                if (it != L.bracket(i, j).end()) s += it->second;
            }
        R.remarkSum = R.remarkSum && s == 0;
    }

    // Transport: the transpose of sum Stan(e*_i) (x) r_{e_i} on Stan (x) U(n),
    // read on Cost (x) U(n)*, against s * sum Cost(e*_i) (x) l_{e_i}.
    {
        std::vector<ClMat> CostEs;
        for (int i = 0; i < m; ++i) CostEs.push_back(module_matrix(cl_estar(m, i + 1), CliffordModule::Cost));
        bool plus = true, minus = true;
        for (int d = 0; d <= bound; ++d)
            for (const Word& u : M.dm.monomials(d))
                for (Mask J = 0; J < (Mask(1) << m); ++J)
                    for (Mask I = 0; I < (Mask(1) << m); ++I)
                        for (int i = 0; i < m; ++i) {
                            const int dd = d + absdeg(env, M.nb[i]);
                            if (dd > bound) continue;
                            for (const Word& f : M.dm.monomials(dd)) {
                                // <X(e_J (x) u), e*_I (x) f>
                                const Q lhs = Q(M.Es[i][I][J]) * coef(env.word(append(u, M.nb[i])), f);
                                // <e_J (x) u, Z(e*_I (x) f)>
                                const Q rhs = Q(CostEs[i][J][I]) * coef(M.dm.act(M.nb[i], f), u);
                                plus = plus && lhs == rhs;
                                minus = minus && lhs == -rhs;
                            }
                        }
        // eta theta(D2_B) = s sum e*_i (x) l; D2_A = sl sum e*_i (x) l; need s = -sl.
        R.transport = minus ? false : plus;          // corrected sl = -1 needs s = +1
        R.transportLiteral = plus ? false : minus;   // literal sl = +1 needs s = -1
        if (plus && minus) R.transport = R.transportLiteral = true;  // only if X vanishes
        if (!R.transport) note("eta theta(D2_B) != -D2_A");
    }
    return R;
}

// ---- Koszul complex ----------------------------------------------------------

namespace {

int popcount(Mask x) { return __builtin_popcount(x); }

}  // namespace

KoszulReport koszul_tor(const Envelope& env, int bound) {
    const auto& L = env.algebra();
    const IVec& nb = L.n_basis;
    const int m = static_cast<int>(nb.size());
    DualModule dm(env, nb);
    auto lamDeg = [&](Mask I) {
        int s = 0;
        for (int p = 0; p < m; ++p)
            if (I >> p & 1) s += absdeg(env, nb[p]);
        return s;
    };
    const int top = lamDeg((Mask(1) << m) - 1);
    auto pos = [&](int k) { return static_cast<int>(std::find(nb.begin(), nb.end(), k) - nb.begin()); };
    using Key = std::pair<Mask, Word>;

    auto d = [&](const Key& key, int s1) {
        std::map<Key, Q> out;
        const Mask I = key.first;
        std::vector<int> ps;
        for (int p = 0; p < m; ++p)
            if (I >> p & 1) ps.push_back(p);
        for (size_t a = 0; a < ps.size(); ++a) {
            const Q sign = (a % 2 == 0 ? 1 : -1) * s1;  // (-1)^{pos+1} with 1-based pos
            for (const auto& [M, q] : dm.act(nb[ps[a]], key.second)) add_term(out, {I & ~(Mask(1) << ps[a]), M}, sign * q);
        }
        for (size_t a = 0; a < ps.size(); ++a)
            for (size_t b = a + 1; b < ps.size(); ++b) {
                const Q sign = ((a + b) % 2 == 0) ? 1 : -1;  // (-1)^{(a+1)+(b+1)}
                const Mask rest = I & ~(Mask(1) << ps[a]) & ~(Mask(1) << ps[b]);
                for (const auto& [k, c] : L.bracket(nb[ps[a]], nb[ps[b]])) {
                    const int r = pos(k);
                    if (rest >> r & 1) continue;
                    const int before = popcount(rest & ((Mask(1) << r) - 1));
                    add_term(out, {rest | (Mask(1) << r), key.second}, sign * c * (before % 2 ? -1 : 1));
                }
            }
        return out;
    };
    auto basis = [&](int k, int w) {
        std::vector<Key> out;
        for (Mask I = 0; I < (Mask(1) << m); ++I) {
            if (popcount(I) != k) continue;
            const int deg = w + lamDeg(I);
            if (deg < 0) continue;
            for (const Word& M : dm.monomials(deg)) out.push_back({I, M});
        }
        return out;
    };
    KoszulReport R;
    int s1 = 0;
    for (int cand : {1, -1}) {
        bool ok = true;
        for (int w = -top; w <= bound && ok; ++w)
            for (int k = 2; k <= m && ok; ++k)
                for (const auto& key : basis(k, w)) {
                    std::map<Key, Q> dd;
                    for (const auto& [k2, c] : d(key, cand)) add_all(dd, d(k2, cand), c);
                    if (!dd.empty()) {
                        ok = false;
                        break;
                    }
                }
        if (ok) {
            s1 = cand;
            break;
        }
    }
    R.squareZero = s1 != 0;
    if (!R.squareZero) return R;
    for (int w = -top; w <= bound; ++w) {
        std::vector<int> rk(m + 2, 0);  // rk[k] = rank of d_k : C_k -> C_{k-1}
        std::vector<int> dim(m + 1, 0);
        for (int k = 0; k <= m; ++k) dim[k] = static_cast<int>(basis(k, w).size());
        for (int k = 1; k <= m; ++k) {
            const auto src = basis(k, w), dst = basis(k - 1, w);
            if (src.empty() || dst.empty()) continue;
            std::map<Key, int> idx;
            for (size_t i = 0; i < dst.size(); ++i) idx[dst[i]] = static_cast<int>(i);
            QMat A(dst.size(), QVec(src.size(), 0));
            for (size_t j = 0; j < src.size(); ++j)
                for (const auto& [k2, c] : d(src[j], s1)) A[idx.at(k2)][j] = c;
            rk[k] = rank(A);
        }
        for (int k = 0; k <= m; ++k) {
            const int h = dim[k] - rk[k] - rk[k + 1];
            if (h) R.homology[{k, w}] = h;
        }
    }
    R.concentrated = R.homology.size() == 1 && R.homology.begin()->first == std::make_pair(m, -top) &&
                     R.homology.begin()->second == 1;
    return R;
}

}  // namespace affine
