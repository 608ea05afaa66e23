#include "affine/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affine {

AffineWeight AffineWeight::operator+(const AffineWeight& o) const {
    AffineWeight s{m, n + o.n};
    for (size_t i = 0; i < m.size(); ++i) s.m[i] += o.m[i];
    return s;
}

AffineWeight AffineWeight::operator-(const AffineWeight& o) const {
    AffineWeight s{m, n - o.n};
    for (size_t i = 0; i < m.size(); ++i) s.m[i] -= o.m[i];
    return s;
}

AffineWeight AffineWeight::operator*(int k) const {
    AffineWeight s{m, n * k};
    for (int& x : s.m) x *= k;
    return s;
}

namespace {

IMat finite_matrix(char kind, int n) {
    IMat a(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (kind) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
        break;
    case 'B':  // alpha_n short
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -1, -2);
        break;
    case 'C':  // alpha_n long
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n - 1, -2, -1);
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1, -1);
        link(n - 3, n - 1, -1, -1);
        break;
    case 'G':  // alpha_1 long, alpha_2 short
        link(0, 1, -1, -3);
        break;
    default:
        throw std::invalid_argument("unknown Cartan type");
    }
    return a;
}

// Finite roots in simple-root coordinates, by closing the simple roots
// under the simple reflections.
std::vector<IVec> finite_roots(const IMat& a) {
    const int n = static_cast<int>(a.size());
    std::set<IVec> seen;
    std::queue<IVec> todo;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        todo.push(e);
    }
    while (!todo.empty()) {
        IVec b = todo.front();
        todo.pop();
        for (int j = 0; j < n; ++j) {
            int p = 0;
            for (int k = 0; k < n; ++k) p += a[j][k] * b[k];
            IVec c = b;
            c[j] -= p;
            if (seen.insert(c).second) todo.push(c);
        }
    }
    return {seen.begin(), seen.end()};
}

IVec symmetrizer(const IMat& a) {
    const size_t n = a.size();
    std::vector<Q> d(n, 0);
    d[0] = 1;
    std::queue<size_t> todo;
    todo.push(0);
    while (!todo.empty()) {
        size_t i = todo.front();
        todo.pop();
        for (size_t j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * a[i][j] / a[j][i];
            todo.push(j);
        }
    }
    for (const Q& x : d)
        if (x == 0) throw std::invalid_argument("Cartan matrix is not indecomposable");
    IVec out = primitive_integer(d);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (out[i] * a[i][j] != out[j] * a[j][i])
                throw std::invalid_argument("Cartan matrix is not symmetrizable");
    return out;
}

}  // namespace

IMat affine_matrix_of_type(const std::string& type) {
    if (type.size() < 2) throw std::invalid_argument("bad type " + type);
    const char kind = type[0];
    const int n = std::stoi(type.substr(1));
    IMat fin = finite_matrix(kind, n);
    auto roots = finite_roots(fin);
    IVec theta = *std::max_element(roots.begin(), roots.end(), [](const IVec& x, const IVec& y) {
        return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
    });
    IVec dfin = symmetrizer(fin);
    const int D = *std::max_element(dfin.begin(), dfin.end());
    IMat a(n + 1, IVec(n + 1, 0));
    a[0][0] = 2;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i + 1][j + 1] = fin[i][j];
        int p = 0;
        for (int k = 0; k < n; ++k) p += fin[i][k] * theta[k];
        a[i + 1][0] = -p;
    }
    for (int j = 0; j < n; ++j) a[0][j + 1] = dfin[j] * a[j + 1][0] / D;
    return a;
}

AffineCartan cartan_of_type(const std::string& type) {
    AffineCartan C = solve_marks(affine_matrix_of_type(type));
    C.name = type;
    return C;
}

IMat parse_matrix(const std::string& text) {
    IMat m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        for (char& ch : line)
            if (ch == ',' || ch == '[' || ch == ']' || ch == ';') ch = ' ';
        std::istringstream ls(line);
        IVec row;
        int x;
        while (ls >> x) row.push_back(x);
        if (!ls.eof()) throw std::invalid_argument("non-integer entry in matrix: " + line);
        if (!row.empty()) m.push_back(row);
    }
    return m;
}

AffineCartan solve_marks(const IMat& a) {
    const size_t n = a.size();
    if (n < 2) throw std::invalid_argument("affine Cartan matrix needs at least two nodes");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 2) throw std::invalid_argument("diagonal entry is not 2");
            if (i != j && a[i][j] > 0) throw std::invalid_argument("positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("a_ij = 0 does not imply a_ji = 0");
        }

    AffineCartan C;
    C.r = static_cast<int>(n) - 1;
    C.a = a;

    QMat qa = to_q(a);
    auto right = nullspace(qa);
    auto left = nullspace(transpose(qa));
    if (right.size() != 1 || left.size() != 1)
        throw std::invalid_argument("not affine: kernel dimension is " +
                                    std::to_string(right.size()) + ", expected 1");
    auto normalize = [&](QVec v, const char* what) {
        if (v[0] == 0) throw std::invalid_argument(std::string(what) + " has r_0 = 0");
        Q s = v[0];
        IVec out;
        for (Q& x : v) {
            x /= s;
            if (x.get_den() != 1 || x <= 0)
                throw std::invalid_argument(std::string(what) +
                                            " is not a positive integer vector with entry 0 equal "
                                            "to 1 (not untwisted affine)");
            out.push_back(static_cast<int>(x.get_num().get_si()));
        }
        return out;
    };
    C.rp = normalize(right[0], "right kernel");
    C.rr = normalize(left[0], "left kernel");
    C.d = symmetrizer(a);
    C.D = *std::max_element(C.d.begin(), C.d.end());
    if (C.D > 3) throw std::invalid_argument("D = max d_i exceeds 3");
    for (int x : C.d) {
        if (C.D % x != 0) throw std::invalid_argument("d_i does not divide D");
        C.dhat.push_back(C.D / x);
    }
    if (C.d[0] != C.D) throw std::invalid_argument("affine node is short (twisted type)");

    C.sym.assign(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) C.sym[i][j] = C.d[i] * a[i][j];
    for (size_t k = 2; k <= n; ++k) {
        QMat minor(k - 1, QVec(k - 1));
        for (size_t i = 1; i < k; ++i)
            for (size_t j = 1; j < k; ++j) minor[i - 1][j - 1] = C.sym[i][j];
        if (det(minor) <= 0) throw std::invalid_argument("finite submatrix is not of finite type");
    }

    QMat fin(C.r, QVec(C.r));
    for (int i = 0; i < C.r; ++i)
        for (int j = 0; j < C.r; ++j) fin[i][j] = a[i + 1][j + 1];
    C.fin_inv = inverse(fin);
    C.fund_form.assign(C.r, QVec(C.r));
    for (int i = 0; i < C.r; ++i)
        for (int j = 0; j < C.r; ++j) C.fund_form[i][j] = C.fin_inv[i][j] * C.d[i + 1] / C.D;

    // Finite coroots together with their primed images.
    std::map<AffineRoot, std::pair<IVec, int>> orbit;
    std::queue<AffineRoot> todo;
    for (int i = 1; i <= C.r; ++i) {
        AffineRoot h(n, 0);
        h[i] = 1;
        IVec hp(n);
        for (size_t k = 0; k < n; ++k) hp[k] = a[k][i];
        orbit[h] = {hp, C.d[i]};
        todo.push(h);
    }
    while (!todo.empty()) {
        AffineRoot h = todo.front();
        todo.pop();
        auto [hp, dh] = orbit[h];
        for (int j = 1; j <= C.r; ++j) {
            AffineRoot y = simple_reflection(C, j, h);
            if (orbit.count(y)) continue;
            IVec yp = hp;
            const int xj = hp[j];
            for (size_t k = 0; k < n; ++k) yp[k] -= xj * a[k][j];
            orbit[y] = {yp, dh};
            todo.push(y);
        }
    }
    for (auto& [h, v] : orbit) {
        C.fin_coroots.push_back(h);
        C.fin_coroot_prime.push_back(v.first);
        C.fin_coroot_d.push_back(v.second);
    }

    IMat finA(C.r, IVec(C.r));
    for (int i = 0; i < C.r; ++i)
        for (int j = 0; j < C.r; ++j) finA[i][j] = a[i + 1][j + 1];
    for (const IVec& b : finite_roots(finA)) {
        IVec full(n, 0);
        std::copy(b.begin(), b.end(), full.begin() + 1);
        C.fin_roots.push_back(full);
    }
    C.theta = C.rp;
    C.theta[0] = 0;
    if (!std::binary_search(C.fin_roots.begin(), C.fin_roots.end(), C.theta))
        throw std::invalid_argument("right kernel does not come from a highest root (twisted type)");
    return C;
}

bool AffineCartan::is_positive_finite_coroot(const AffineRoot& h) const {
    return coroot_index(h) >= 0 && is_positive(h);
}

int AffineCartan::coroot_index(const AffineRoot& h) const {
    auto it = std::lower_bound(fin_coroots.begin(), fin_coroots.end(), h);
    if (it == fin_coroots.end() || *it != h) return -1;
    return static_cast<int>(it - fin_coroots.begin());
}

AffineWeight alpha(const AffineCartan& C, int i) {
    AffineWeight w;
    for (int k = 0; k <= C.r; ++k) w.m.push_back(C.a[k][i]);
    w.n = i == 0 ? 1 : 0;
    return w;
}

AffineWeight rho(const AffineCartan& C) { return {IVec(C.size(), 1), 0}; }

AffineWeight fundamental(const AffineCartan& C, int i) {
    AffineWeight w{IVec(C.size(), 0), 0};
    w.m[i] = 1;
    return w;
}

AffineWeight root_lattice_weight(const AffineCartan& C, const RootLatticeVector& b) {
    AffineWeight w{IVec(C.size(), 0), 0};
    for (int j = 0; j <= C.r; ++j) {
        if (b[j] == 0) continue;
        for (int k = 0; k <= C.r; ++k) w.m[k] += C.a[k][j] * b[j];
    }
    w.n = b[0];
    return w;
}

AffineWeight simple_reflection(const AffineCartan& C, int i, const AffineWeight& x) {
    return x - alpha(C, i) * x.m[i];
}

AffineRoot simple_reflection(const AffineCartan& C, int i, const AffineRoot& y) {
    AffineRoot out = y;
    int p = 0;
    for (int k = 0; k <= C.r; ++k) p += y[k] * C.a[k][i];
    out[i] -= p;
    return out;
}

int pairing(const AffineRoot& y, const IVec& x) {
    int s = 0;
    for (size_t i = 0; i < y.size(); ++i) s += y[i] * x[i];
    return s;
}

Q level(const AffineCartan& C, const AffineWeight& x) { return pairing(C.rr, x.m); }

int hgt(const RootLatticeVector& b) { return std::accumulate(b.begin(), b.end(), 0); }

std::optional<IVec> root_lattice_coords(const AffineCartan& C, const AffineWeight& x) {
    if (x.n.get_den() != 1) return std::nullopt;
    const int b0 = static_cast<int>(x.n.get_num().get_si());
    IVec b(C.size(), 0);
    b[0] = b0;
    for (int i = 1; i <= C.r; ++i) {
        Q s = 0;
        for (int j = 1; j <= C.r; ++j) {
            int v = x.m[j] - b0 * C.a[j][0];  // finite part of x + b0 theta
            s += C.fin_inv[i - 1][j - 1] * v;
        }
        if (s.get_den() != 1) return std::nullopt;
        b[i] = static_cast<int>(s.get_num().get_si());
    }
    if (root_lattice_weight(C, b).m != x.m) return std::nullopt;
    return b;
}

RootLatticeVector weight_diff(const AffineCartan& C, const AffineWeight& lambda,
                              const AffineWeight& mu) {
    auto b = root_lattice_coords(C, lambda - mu);
    if (!b) throw std::domain_error("not in positive root cone: non-integral difference");
    for (int x : *b)
        if (x < 0) throw std::domain_error("not in positive root cone");
    return *b;
}

Q invariant_form(const AffineCartan& C, const AffineWeight& x, const AffineWeight& y) {
    Q s = 0;
    for (int i = 1; i <= C.r; ++i)
        for (int j = 1; j <= C.r; ++j)
            if (x.m[i] != 0 && y.m[j] != 0) s += C.fund_form[i - 1][j - 1] * x.m[i] * y.m[j];
    return s + level(C, x) * y.n + level(C, y) * x.n;
}

Q casimir_eigenvalue(const AffineCartan& C, const AffineWeight& nu) {
    AffineWeight t = nu + rho(C);
    return invariant_form(C, t, t);
}

long form_root_lattice_scaled(const AffineCartan& C, const IVec& b1, const IVec& b2) {
    long s = 0;
    for (int i = 0; i <= C.r; ++i) {
        if (b1[i] == 0) continue;
        for (int j = 0; j <= C.r; ++j) s += static_cast<long>(b1[i]) * C.sym[i][j] * b2[j];
    }
    return s;
}

bool is_dominant(const AffineCartan& C, const AffineWeight& x, int k) {
    if (level(C, x) != k) throw std::invalid_argument("weight is not of the stated level");
    return std::all_of(x.m.begin(), x.m.end(), [](int v) { return v >= 0; });
}

bool is_positive(const IVec& v) {
    bool nz = false;
    for (int x : v) {
        if (x < 0) return false;
        nz |= x != 0;
    }
    return nz;
}

bool is_negative(const IVec& v) {
    bool nz = false;
    for (int x : v) {
        if (x > 0) return false;
        nz |= x != 0;
    }
    return nz;
}

std::pair<int, int> split_coroot(const AffineCartan& C, const AffineRoot& y) {
    const int k = y[0];
    AffineRoot fin = y;
    for (int i = 0; i <= C.r; ++i) fin[i] -= k * C.rr[i];
    const int idx = C.coroot_index(fin);
    if (idx < 0) return {-1, 0};
    const int dh = C.D / C.fin_coroot_d[idx];
    if (k % dh != 0) return {-1, 0};
    return {idx, k / dh};
}

bool is_real_coroot(const AffineCartan& C, const AffineRoot& y) { return split_coroot(C, y).first >= 0; }

AffineRoot make_coroot(const AffineCartan& C, int fin_index, int m) {
    AffineRoot h = C.fin_coroots[fin_index];
    const int k = C.D / C.fin_coroot_d[fin_index] * m;
    for (int i = 0; i <= C.r; ++i) h[i] += k * C.rr[i];
    return h;
}

std::string format_weight(const AffineWeight& x) { return join(x.m) + " ; " + to_string(x.n); }

AffineWeight parse_weight(const AffineCartan& C, const std::string& text) {
    std::string s;
    // Normalize the Greek capital lambda (UTF-8 0xCE 0x9B) to 'L'.
    for (size_t i = 0; i < text.size(); ++i) {
        if (static_cast<unsigned char>(text[i]) == 0xCE && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x9B) {
            s += 'L';
            ++i;
        } else if (text[i] != ' ' || !s.empty()) {
            s += text[i];
        }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s == "rho") return rho(C);
    if (s.find('L') != std::string::npos) {
        AffineWeight w{IVec(C.size(), 0), 0};
        std::istringstream in(s);
        std::string term;
        while (std::getline(in, term, '+')) {
            auto pos = term.find('L');
            if (pos == std::string::npos) throw std::invalid_argument("bad weight term: " + term);
            int coef = pos == 0 ? 1 : std::stoi(term.substr(0, pos));
            int idx = std::stoi(term.substr(pos + 1));
            if (idx < 0 || idx > C.r) throw std::invalid_argument("fundamental index out of range");
            w.m[idx] += coef;
        }
        return w;
    }
    std::string head = s, tail;
    if (auto p = s.find(';'); p != std::string::npos) {
        head = s.substr(0, p);
        tail = s.substr(p + 1);
    }
    for (char& ch : head)
        if (ch == ',') ch = ' ';
    std::istringstream in(head);
    AffineWeight w;
    int x;
    while (in >> x) w.m.push_back(x);
    if (static_cast<int>(w.m.size()) != C.size())
        throw std::invalid_argument("weight literal has " + std::to_string(w.m.size()) +
                                    " entries, expected " + std::to_string(C.size()));
    auto b = tail.find_first_not_of(' ');
    w.n = b == std::string::npos ? Q(0) : Q(tail.substr(b, tail.find_last_not_of(' ') - b + 1));
    w.n.canonicalize();
    return w;
}

}  // namespace affine
