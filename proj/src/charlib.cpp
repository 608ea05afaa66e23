#include "affine/charlib.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affine {

namespace {

/// All nonnegative vectors of length n with hgt <= N, by height then lexicographically.
std::vector<IVec> offsets(int n, int N) {
    std::vector<IVec> out;
    IVec v(n, 0);
    std::vector<IVec> layer{v};
    for (int h = 0; h <= N; ++h) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<IVec> next;
        for (const auto& x : layer)
            for (int i = 0; i < n; ++i) {
                IVec y = x;
                ++y[i];
                next.push_back(std::move(y));
            }
        layer = std::move(next);
    }
    return out;
}

bool geq(const IVec& a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

IVec add(const IVec& a, const IVec& b) {
    IVec c = a;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

void require_compatible(const Character& a, const Character& b) {
    if (!(a.base == b.base) || a.N != b.N || a.qShift != b.qShift)
        throw std::invalid_argument("characters differ in base, truncation or q-shift");
}

/// Coefficients of prod over positive roots of (1 - e^{-alpha})^{-mult}.
std::map<IVec, long> partition_table(const AffineCartan& C, int N) {
    const auto offs = offsets(C.size(), N);
    std::map<IVec, long> f;
    for (const auto& b : offs) f[b] = 0;
    f[IVec(C.size(), 0)] = 1;
    for (const auto& [root, m] : positive_roots(C, N))
        for (int copy = 0; copy < m; ++copy)
            for (const auto& b : offs)
                if (geq(b, root)) f[b] += f[sub(b, root)];
    for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
    return f;
}

int integral_level(const AffineCartan& C, const AffineWeight& lambda) {
    const Q k = level(C, lambda);
    if (k.get_den() != 1) throw std::invalid_argument("weight has non-integral level");
    return static_cast<int>(k.get_num().get_si());
}

void require_dominant(const AffineCartan& C, const AffineWeight& lambda) {
    if (!is_dominant(C, lambda, integral_level(C, lambda)))
        throw std::invalid_argument("weight is not dominant integral");
}

}  // namespace

long Character::at(const IVec& b) const {
    auto it = mult.find(b);
    return it == mult.end() ? 0 : it->second;
}

void Character::add(const IVec& b, long v) {
    if (v == 0) return;
    if (hgt(b) > N) throw std::out_of_range("offset beyond truncation");
    long& x = mult[b];
    x += v;
    if (x == 0) mult.erase(b);
}

std::vector<std::pair<IVec, int>> positive_roots(const AffineCartan& C, int maxHgt) {
    std::vector<std::pair<IVec, int>> out;
    const int hd = hgt(C.rp);
    const int ht = hgt(C.theta);
    for (int n = 0; n * hd <= maxHgt + ht; ++n) {
        for (const auto& beta : C.fin_roots) {
            if (n == 0 && !is_positive(beta)) continue;
            IVec v = beta;
            for (int i = 0; i < C.size(); ++i) v[i] += n * C.rp[i];
            if (hgt(v) <= maxHgt) out.emplace_back(v, 1);
        }
        if (n > 0 && n * hd <= maxHgt) {
            IVec v = C.rp;
            for (int& x : v) x *= n;
            out.emplace_back(v, C.r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Character operator+(const Character& a, const Character& b) {
    require_compatible(a, b);
    Character c = a;
    for (const auto& [k, v] : b.mult) c.add(k, v);
    return c;
}

Character operator-(const Character& a, const Character& b) { return a + (-1L) * b; }

Character operator*(long k, const Character& a) {
    Character c = a;
    c.mult.clear();
    if (k == 0) return c;
    for (const auto& [b, v] : a.mult) c.mult[b] = k * v;
    return c;
}

bool operator==(const Character& a, const Character& b) {
    return a.base == b.base && a.N == b.N && a.qShift == b.qShift && a.mult == b.mult;
}

Character truncate(const Character& ch, int n) {
    if (n > ch.N) throw std::invalid_argument("cannot extend a truncation");
    Character c = ch;
    c.N = n;
    c.mult.clear();
    for (const auto& [b, v] : ch.mult)
        if (hgt(b) <= n) c.mult[b] = v;
    return c;
}

Character rebase(const AffineCartan& C, const Character& ch, const AffineWeight& newBase, int newN) {
    const IVec d = weight_diff(C, newBase, ch.base);
    if (newN > ch.N + hgt(d)) throw std::invalid_argument("rebase would exceed the known truncation");
    Character c;
    c.base = newBase;
    c.N = newN;
    c.qShift = ch.qShift + hgt(d);
    for (const auto& [b, v] : ch.mult) {
        IVec b2 = add(b, d);
        if (hgt(b2) <= newN) c.mult[b2] = v;
    }
    return c;
}

Character verma_char(const AffineCartan& C, const AffineWeight& lambda, int N) {
    if (N < 0) throw std::invalid_argument("truncation must be nonnegative");
    Character ch;
    ch.base = lambda;
    ch.N = N;
    ch.mult = partition_table(C, N);
    return ch;
}

std::vector<LengthRecord> contributing_elements(const WeylGroup& G, const AffineWeight& lambda, int N) {
    const AffineCartan& C = G.cartan();
    require_dominant(C, lambda);
    // hgt(lambda - w.lambda) grows strictly along s_i w > w, so the set is an
    // order ideal of the left weak order and the pruned search is complete.
    return G.enumerate_while(
        [&](const WeylElt& w) { return hgt(weight_diff(C, lambda, G.dot(w, lambda))) <= N; }, -1);
}

Character simple_char_kac(const WeylGroup& G, const AffineWeight& lambda, int N) {
    const AffineCartan& C = G.cartan();
    const auto table = partition_table(C, N);
    Character ch;
    ch.base = lambda;
    ch.N = N;
    for (const auto& rec : contributing_elements(G, lambda, N)) {
        const IVec d = weight_diff(C, lambda, G.dot(rec.element, lambda));
        const long sign = rec.ell % 2 ? -1 : 1;
        const int room = N - hgt(d);
        for (const auto& [b, v] : table)
            if (hgt(b) <= room) ch.add(add(b, d), sign * v);
    }
    for (const auto& [b, v] : ch.mult)
        if (v < 0) throw std::logic_error("negative multiplicity in alternating sum");
    return ch;
}

Character simple_char_freudenthal(const AffineCartan& C, const AffineWeight& lambda, int N) {
    require_dominant(C, lambda);
    const int n = C.size();
    const auto roots = positive_roots(C, N);
    // D (lambda | alpha) and D (lambda + rho | alpha) on simple roots.
    IVec lam(n), lamRho(n);
    for (int i = 0; i < n; ++i) {
        lam[i] = lambda.m[i] * C.d[i];
        lamRho[i] = (lambda.m[i] + 1) * C.d[i];
    }
    auto dot = [](const IVec& x, const IVec& y) {
        long s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += static_cast<long>(x[i]) * y[i];
        return s;
    };
    Character ch;
    ch.base = lambda;
    ch.N = N;
    for (const auto& b : offsets(n, N)) {
        if (hgt(b) == 0) {
            ch.mult[b] = 1;
            continue;
        }
        const long lhs = 2 * dot(b, lamRho) - form_root_lattice_scaled(C, b, b);
        long rhs = 0;
        for (const auto& [alpha, ma] : roots) {
            IVec rest = b;
            for (int j = 1;; ++j) {
                rest = sub(rest, alpha);
                if (!std::all_of(rest.begin(), rest.end(), [](int x) { return x >= 0; })) break;
                const long mv = ch.at(rest);
                if (mv == 0) continue;
                rhs += ma * mv * (dot(alpha, lam) - form_root_lattice_scaled(C, rest, alpha));
            }
        }
        rhs *= 2;
        if (lhs == 0) {
            if (rhs != 0) throw std::logic_error("Freudenthal recursion: zero coefficient with nonzero sum");
            continue;
        }
        if (rhs % lhs != 0) throw std::logic_error("Freudenthal recursion: non-integral multiplicity");
        if (rhs / lhs != 0) ch.mult[b] = rhs / lhs;
    }
    return ch;
}

Character twisted_verma_char(const WeylGroup& G, const WeylElt& w, const AffineWeight& lambda, int N) {
    const AffineCartan& C = G.cartan();
    const AffineWeight mu = G.dot(w, lambda);
    auto d = root_lattice_coords(C, lambda - mu);
    if (!d) throw std::logic_error("dot orbit left the root lattice");
    Character ch = verma_char(C, mu, N);
    ch.qShift = -hgt(*d);
    return ch;
}

Character wakimoto_char(const AffineCartan& C, const AffineWeight& lambda, int N) {
    return verma_char(C, lambda, N);
}

Character linkage_filter(const AffineCartan& C, const Character& ch, const AffineWeight& lambda) {
    const Q target = casimir_eigenvalue(C, lambda);
    Character out = ch;
    out.mult.clear();
    for (const auto& [b, v] : ch.mult)
        if (casimir_eigenvalue(C, ch.base - root_lattice_weight(C, b)) == target) out.mult[b] = v;
    return out;
}

std::string dump(const Character& ch) {
    std::ostringstream os;
    for (const auto& [b, v] : ch.mult) os << join(b) << " : " << v << " : " << ch.qdeg(b) << '\n';
    return os.str();
}

}  // namespace affine
