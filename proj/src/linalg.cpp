#include "affine/linalg.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace affine {

QMat to_q(const IMat& m) {
    QMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (int x : m[i]) out[i].emplace_back(x);
    return out;
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && sgn(m[p][col]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Q inv = 1 / m[row][col];
        for (size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || sgn(m[i][col]) == 0) continue;
            Q f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

Q det(QMat m) {
    const size_t n = m.size();
    Q d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Q f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::vector<QVec> nullspace(const QMat& m) {
    std::vector<QVec> basis;
    if (m.empty()) return basis;
    QMat r = m;
    auto piv = rref(r);
    const size_t cols = m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int p : piv) is_pivot[p] = true;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, 0);
        v[free] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat inverse(const QMat& m) {
    const size_t n = m.size();
    QMat aug(n, QVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1))
        throw std::domain_error("singular matrix");
    QMat out(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat t(m[0].size(), IVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

IMat matmul(const IMat& a, const IMat& b) {
    IMat c(a.size(), IVec(b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            if (a[i][k] != 0)
                for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IVec primitive_integer(const QVec& v) {
    mpz_class l = 1;
    for (const Q& q : v) l = lcm(l, mpz_class(q.get_den()));
    std::vector<mpz_class> z;
    for (const Q& q : v) z.push_back(mpz_class(q * l));
    mpz_class g = 0;
    for (auto& x : z) g = gcd(g, x);
    if (g == 0) return IVec(v.size(), 0);
    int sign = 1;
    for (auto& x : z)
        if (x != 0) {
            sign = x > 0 ? 1 : -1;
            break;
        }
    IVec out;
    for (auto& x : z) {
        mpz_class y = x / g * sign;
        if (!y.fits_sint_p()) throw std::overflow_error("primitive vector overflows int");
        out.push_back(static_cast<int>(y.get_si()));
    }
    return out;
}

std::string to_string(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str() + "/1";
    return q.get_str();
}

std::string join(const IVec& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace affine
