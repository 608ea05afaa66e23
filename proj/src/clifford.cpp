#include "affine/clifford.hpp"
#include "affine/linalg.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace affine {

namespace {

Mask bit(int i) { return Mask{1} << (i - 1); }

/// (-1)^{number of elements of K below index i}
long below_sign(Mask K, int i) { return std::popcount(K & (bit(i) - 1)) % 2 ? -1 : 1; }

void check_index(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("Clifford generator index out of range");
}

void bump(CliffordElt& x, Mask I, Mask J, long c) {
    if (c == 0) return;
    long& v = x.terms[{I, J}];
    v += c;
    if (v == 0) x.terms.erase({I, J});
}

CliffordElt left_e(int i, const CliffordElt& y) {
    CliffordElt z = cl_zero(y.n);
    for (const auto& [m, c] : y.terms) {
        const auto [K, L] = m;
        if (K & bit(i)) continue;
        bump(z, K | bit(i), L, below_sign(K, i) * c);
    }
    return z;
}

CliffordElt left_estar(int j, const CliffordElt& y) {
    CliffordElt z = cl_zero(y.n);
    for (const auto& [m, c] : y.terms) {
        const auto [K, L] = m;
        // e*_j e_K = [j in K] (+-) e_{K-j} + (-1)^{|K|} e_K e*_j
        if (K & bit(j)) bump(z, K & ~bit(j), L, below_sign(K, j) * c);
        if (!(L & bit(j))) {
            const long s = (std::popcount(K) % 2 ? -1 : 1) * below_sign(L, j);
            bump(z, K, L | bit(j), s * c);
        }
    }
    return z;
}

void check_same(const CliffordElt& a, const CliffordElt& b) {
    if (a.n != b.n) throw std::invalid_argument("Clifford elements over different n");
}

}  // namespace

CliffordElt cl_zero(int n) {
    if (n < 0 || n > kCliffordMaxN) throw std::invalid_argument("unsupported Clifford rank");
    return CliffordElt{n, {}};
}

CliffordElt cl_one(int n) { return cl_monomial(n, 0, 0); }

CliffordElt cl_e(int n, int i) {
    check_index(n, i);
    return cl_monomial(n, bit(i), 0);
}

CliffordElt cl_estar(int n, int i) {
    check_index(n, i);
    return cl_monomial(n, 0, bit(i));
}

CliffordElt cl_monomial(int n, Mask I, Mask J) {
    CliffordElt x = cl_zero(n);
    const Mask full = (Mask{1} << n) - 1;
    if ((I | J) & ~full) throw std::out_of_range("monomial mask exceeds n");
    x.terms[{I, J}] = 1;
    return x;
}

CliffordElt operator+(const CliffordElt& a, const CliffordElt& b) {
    check_same(a, b);
    CliffordElt c = a;
    for (const auto& [m, v] : b.terms) bump(c, m.first, m.second, v);
    return c;
}

CliffordElt operator-(const CliffordElt& a, const CliffordElt& b) { return a + (-1L) * b; }

CliffordElt operator*(long k, const CliffordElt& a) {
    CliffordElt c = cl_zero(a.n);
    if (k == 0) return c;
    for (const auto& [m, v] : a.terms) c.terms[m] = k * v;
    return c;
}

CliffordElt multiply(const CliffordElt& x, const CliffordElt& y) {
    check_same(x, y);
    CliffordElt acc = cl_zero(x.n);
    for (const auto& [m, c] : x.terms) {
        CliffordElt z = y;
        for (int j = x.n; j >= 1; --j)
            if (m.second & bit(j)) z = left_estar(j, z);
        for (int i = x.n; i >= 1; --i)
            if (m.first & bit(i)) z = left_e(i, z);
        acc = acc + c * z;
    }
    return acc;
}

CliffordElt swap_dual(const CliffordElt& x) {
    // e_I e*_J maps to e*_I e_J; renormal-order by multiplication.
    CliffordElt acc = cl_zero(x.n);
    for (const auto& [m, c] : x.terms)
        acc = acc + c * multiply(cl_monomial(x.n, 0, m.first), cl_monomial(x.n, m.second, 0));
    return acc;
}

CliffordElt sigma(const CliffordElt& x) {
    CliffordElt acc = cl_zero(x.n);
    for (const auto& [m, c] : x.terms) {
        // reverse(e_I e*_J) = reverse(e*_J) reverse(e_I); reversing k anticommuting
        // factors costs (-1)^{k(k-1)/2}.
        const int a = std::popcount(m.first), b = std::popcount(m.second);
        const long s = ((a * (a - 1) / 2 + b * (b - 1) / 2) % 2) ? -1 : 1;
        acc = acc + (s * c) * multiply(cl_monomial(x.n, 0, m.second), cl_monomial(x.n, m.first, 0));
    }
    return acc;
}

std::vector<long> act(const CliffordElt& x, const std::vector<long>& v, CliffordModule module) {
    const size_t dim = size_t{1} << x.n;
    if (v.size() != dim) throw std::invalid_argument("module vector has wrong dimension");
    const CliffordElt y = module == CliffordModule::Stan ? x : swap_dual(x);
    CliffordElt vec = cl_zero(x.n);
    for (size_t K = 0; K < dim; ++K)
        if (v[K]) bump(vec, static_cast<Mask>(K), 0, v[K]);
    std::vector<long> out(dim, 0);
    // Terms with a surviving e* factor vanish on the generator.
    for (const auto& [m, c] : multiply(y, vec).terms)
        if (m.second == 0) out[m.first] += c;
    return out;
}

std::vector<std::vector<long>> module_matrix(const CliffordElt& x, CliffordModule module) {
    const size_t dim = size_t{1} << x.n;
    std::vector<std::vector<long>> M(dim, std::vector<long>(dim, 0));
    for (size_t K = 0; K < dim; ++K) {
        std::vector<long> v(dim, 0);
        v[K] = 1;
        const auto col = act(x, v, module);
        for (size_t J = 0; J < dim; ++J) M[J][K] = col[J];
    }
    return M;
}

CliffordElt matrix_unit(int n, Mask I, Mask J) {
    const Mask full = (Mask{1} << n) - 1;
    return multiply(multiply(cl_monomial(n, J, 0), cl_monomial(n, 0, full)), cl_monomial(n, I, 0));
}

MatrixUnitReport matrix_unit_check(int n) {
    MatrixUnitReport rep;
    rep.n = n;
    const Mask full = (Mask{1} << n) - 1;
    const long global = (n * (n - 1) / 2) % 2 ? -1 : 1;
    auto single_entry = [](const std::vector<std::vector<long>>& M, Mask row, Mask col, long& value) {
        for (size_t r = 0; r < M.size(); ++r)
            for (size_t c = 0; c < M.size(); ++c)
                if (M[r][c] != 0 && (r != row || c != col)) return false;
        value = M[row][col];
        return value == 1 || value == -1;
    };
    for (Mask I = 0; I <= full; ++I)
        for (Mask J = 0; J <= full; ++J) {
            ++rep.pairs;
            const CliffordElt x = matrix_unit(n, I, J);
            long s = 0, t = 0;
            // Stan: e_{complement of I} -> e_J
            if (single_entry(module_matrix(x, CliffordModule::Stan), J, full & ~I, s)) {
                ++rep.supportOk;
                rep.literalOk += s == 1;
                // e_I e_{complement of I} = eps(I) e_{1..n}
                const long eps = multiply(cl_monomial(n, I, 0), cl_monomial(n, full & ~I, 0)).terms.begin()->second;
                rep.predictedOk += s == eps * global;
            }
            // Cost: e*_I -> e*_{complement of J}
            if (single_entry(module_matrix(x, CliffordModule::Cost), full & ~J, I, t)) {
                ++rep.supportOk;
                rep.literalOk += t == 1;
            }
        }
    return rep;
}

IdentResult ident_check(int n) {
    IdentResult res;
    res.pass = true;
    const Mask full = (Mask{1} << n) - 1;
    const size_t dim = size_t{1} << n;
    std::vector<std::vector<long>> rows;  // flattened Stan matrices, for the rank of alpha
    for (Mask I = 0; I <= full; ++I)
        for (Mask J = 0; J <= full; ++J) {
            const CliffordElt x = cl_monomial(n, I, J);
            const auto A = module_matrix(x, CliffordModule::Stan);
            const auto B = module_matrix(sigma(x), CliffordModule::Cost);
            std::vector<long> flat;
            for (size_t r = 0; r < dim; ++r)
                for (size_t c = 0; c < dim; ++c) {
                    flat.push_back(A[r][c]);
                    if (B[r][c] != A[c][r] && res.pass) {
                        res.pass = false;
                        res.firstViolation = format(x);
                    }
                }
            rows.push_back(std::move(flat));
        }
    QMat m;
    for (const auto& r : rows) {
        QVec q;
        for (long v : r) q.emplace_back(static_cast<signed long>(v));
        m.push_back(std::move(q));
    }
    res.faithful = rank(m) == static_cast<int>(rows.size());
    return res;
}

std::string format(const CliffordElt& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    for (const auto& [m, c] : x.terms) {
        os << (c < 0 ? '-' : '+');
        const long a = c < 0 ? -c : c;
        std::vector<std::string> f;
        for (int i = 1; i <= x.n; ++i)
            if (m.first & bit(i)) f.push_back("e" + std::to_string(i));
        for (int i = 1; i <= x.n; ++i)
            if (m.second & bit(i)) f.push_back("e*" + std::to_string(i));
        if (f.empty()) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        for (size_t k = 0; k < f.size(); ++k) os << (k ? "." : "") << f[k];
    }
    return os.str();
}

}  // namespace affine
