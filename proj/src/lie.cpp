#include "affine/lie.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affine {

void add_to(UElt& acc, const UElt& x, const Q& c) {
    if (c == 0) return;
    for (const auto& [w, v] : x) {
        Q& t = acc[w];
        t += c * v;
        if (t == 0) acc.erase(w);
    }
}

UElt scaled(const UElt& x, const Q& c) {
    UElt out;
    add_to(out, x, c);
    return out;
}

GradedLieAlgebra make_algebra(const std::string& name, const std::vector<std::string>& labels, const IVec& deg,
                              const std::vector<BracketEntry>& brackets, const IVec& n_basis) {
    GradedLieAlgebra L;
    L.name = name;
    L.labels = labels;
    L.deg = deg;
    const int d = static_cast<int>(labels.size());
    if (static_cast<int>(deg.size()) != d) throw std::invalid_argument("degree list does not match basis");
    L.br.assign(d, std::vector<std::map<int, Q>>(d));
    for (const auto& e : brackets) {
        if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= d || e.j >= d || e.k >= d)
            throw std::invalid_argument("bracket index out of range");
        if (e.c == 0) continue;
        L.br[e.i][e.j][e.k] += e.c;
        if (e.i != e.j) L.br[e.j][e.i][e.k] -= e.c;
    }
    for (auto& row : L.br)
        for (auto& m : row)
            for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    L.n_basis = n_basis;
    std::set<int> in_n(n_basis.begin(), n_basis.end());
    for (int i = 0; i < d; ++i)
        if (!in_n.count(i)) L.b_basis.push_back(i);
    return L;
}

namespace {

std::map<int, Q> bracket_vec(const GradedLieAlgebra& L, const std::map<int, Q>& x, const std::map<int, Q>& y) {
    std::map<int, Q> out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y)
            for (const auto& [k, c] : L.br[i][j]) out[k] += a * b * c;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

std::vector<std::string> algebra_violations(const GradedLieAlgebra& L) {
    std::vector<std::string> bad;
    const int d = L.dim();
    auto lbl = [&](int i) { return L.labels[i]; };
    for (int i = 0; i < d; ++i) {
        if (!L.br[i][i].empty()) bad.push_back("antisymmetry: [" + lbl(i) + "," + lbl(i) + "] != 0");
        for (int j = 0; j < d; ++j) {
            for (const auto& [k, c] : L.br[i][j]) {
                if (L.deg[k] != L.deg[i] + L.deg[j])
                    bad.push_back("grading: [" + lbl(i) + "," + lbl(j) + "] has a component of the wrong degree");
                auto it = L.br[j][i].find(k);
                if (it == L.br[j][i].end() || it->second != -c)
                    bad.push_back("antisymmetry: [" + lbl(i) + "," + lbl(j) + "]");
            }
        }
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::map<int, Q> s;
                auto acc = [&](const std::map<int, Q>& v) {
                    for (const auto& [t, c] : v) s[t] += c;
                };
                acc(bracket_vec(L, {{i, 1}}, L.br[j][k]));
                acc(bracket_vec(L, {{j, 1}}, L.br[k][i]));
                acc(bracket_vec(L, {{k, 1}}, L.br[i][j]));
                for (const auto& [t, c] : s)
                    if (c != 0) {
                        bad.push_back("Jacobi: (" + lbl(i) + "," + lbl(j) + "," + lbl(k) + ")");
                        break;
                    }
            }
    std::set<int> in_n(L.n_basis.begin(), L.n_basis.end());
    for (int i : L.n_basis) {
        if (i < 0 || i >= d) {
            bad.push_back("n basis index out of range");
            continue;
        }
        if (L.deg[i] >= 0) bad.push_back("n is not negatively graded: " + lbl(i));
        for (int j : L.n_basis)
            for (const auto& [k, c] : L.br[i][j])
                if (!in_n.count(k)) bad.push_back("n is not a subalgebra: [" + lbl(i) + "," + lbl(j) + "]");
        // ad-nilpotence of every basis vector of n on g
        for (int j = 0; j < d; ++j) {
            std::map<int, Q> v{{j, 1}};
            int steps = 0;
            while (!v.empty() && steps <= d + 1) {
                v = bracket_vec(L, {{i, 1}}, v);
                ++steps;
            }
            if (!v.empty()) {
                bad.push_back("ad " + lbl(i) + " is not nilpotent");
                break;
            }
        }
    }
    // sum over i, j of c_ij^k vanishes for every k
    for (int k = 0; k < d; ++k) {
        Q s = 0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                auto it = L.br[i][j].find(k);
                if (it != L.br[i][j].end()) s += it->second;
            }
        if (s != 0) bad.push_back("sum of structure constants into " + lbl(k) + " is nonzero");
    }
    return bad;
}

const GradedLieAlgebra& validate_algebra(const GradedLieAlgebra& L) {
    auto bad = algebra_violations(L);
    if (!bad.empty()) throw std::invalid_argument("invalid algebra " + L.name + ": " + bad.front());
    return L;
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat unit(int n, int i, int j) {
    Mat m(n, std::vector<int>(n, 0));
    m[i][j] = 1;
    return m;
}

/// Structure constants of a matrix Lie algebra spanned by the given matrices.
std::vector<BracketEntry> brackets_of(const std::vector<Mat>& basis) {
    const int d = static_cast<int>(basis.size());
    const int n = static_cast<int>(basis[0].size());
    // Solve sum_k c_k B_k = X via the flattened coordinates.
    QMat A(n * n, QVec(d, 0));
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) A[r * n + c][k] = basis[k][r][c];
    std::vector<BracketEntry> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            Mat X(n, std::vector<int>(n, 0));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    for (int t = 0; t < n; ++t)
                        X[r][c] += basis[i][r][t] * basis[j][t][c] - basis[j][r][t] * basis[i][t][c];
            QMat aug = A;
            for (int r = 0; r < n * n; ++r) aug[r].push_back(Q(X[r / n][r % n]));
            auto piv = rref(aug);
            if (!piv.empty() && piv.back() == d) throw std::logic_error("matrix basis not closed under bracket");
            for (size_t p = 0; p < piv.size(); ++p)
                if (aug[p][d] != 0) out.push_back({i, j, piv[p], aug[p][d]});
        }
    return out;
}

GradedLieAlgebra sl3(const std::string& name, const IVec& nb) {
    // e1 e2 e12 h1 h2 f1 f2 f12
    Mat h1 = unit(3, 0, 0), h2 = unit(3, 1, 1);
    h1[1][1] = -1;
    h2[2][2] = -1;
    std::vector<Mat> basis{unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2), h1, h2,
                           unit(3, 1, 0), unit(3, 2, 1), unit(3, 2, 0)};
    return make_algebra(name, {"e1", "e2", "e12", "h1", "h2", "f1", "f2", "f12"}, {1, 1, 2, 0, 0, -1, -1, -2},
                        brackets_of(basis), nb);
}

}  // namespace

GradedLieAlgebra builtin_algebra(const std::string& name) {
    if (name == "sl2") {
        Mat h = unit(2, 0, 0);
        h[1][1] = -1;
        return make_algebra(name, {"e", "h", "f"}, {1, 0, -1}, brackets_of({unit(2, 0, 1), h, unit(2, 1, 0)}), {2});
    }
    if (name == "sl3") return sl3(name, {5, 6, 7});
    if (name == "sl3-abelian") return sl3(name, {6, 7});
    if (name == "heisenberg")
        return make_algebra(name, {"f1", "f2", "f12"}, {-1, -1, -2}, {{0, 1, 2, Q(-1)}}, {0, 1, 2});
    if (name == "abelian1") return make_algebra(name, {"x1"}, {-1}, {}, {0});
    if (name == "abelian2") return make_algebra(name, {"x1", "x2"}, {-1, -1}, {}, {0, 1});
    throw std::invalid_argument("unknown algebra: " + name);
}

GradedLieAlgebra parse_algebra(const std::string& text) {
    std::map<int, int> deg;
    std::vector<BracketEntry> br;
    IVec nb;
    bool haveN = false;
    std::istringstream in(text);
    std::string line;
    const std::regex degRe(R"(^\s*deg\s+(\d+)\s*:\s*(-?\d+)\s*$)");
    const std::regex brRe(R"(^\s*bracket\s+(\d+)\s+(\d+)\s*:(.*)$)");
    const std::regex termRe(R"(\(\s*(\d+)\s*,\s*(-?\d+(?:/\d+)?)\s*\))");
    const std::regex nRe(R"(^\s*n\s*:(.*)$)");
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::smatch m;
        if (std::regex_match(line, m, degRe)) {
            deg[std::stoi(m[1]) - 1] = std::stoi(m[2]);
        } else if (std::regex_match(line, m, brRe)) {
            const int i = std::stoi(m[1]) - 1, j = std::stoi(m[2]) - 1;
            const std::string rest = m[3];
            for (std::sregex_iterator it(rest.begin(), rest.end(), termRe), end; it != end; ++it)
                br.push_back({i, j, std::stoi((*it)[1]) - 1, Q((*it)[2].str())});
        } else if (std::regex_match(line, m, nRe)) {
            haveN = true;
            std::istringstream ns(m[1].str());
            int x;
            while (ns >> x) nb.push_back(x - 1);
        } else {
            throw std::invalid_argument("cannot parse algebra line " + std::to_string(lineNo) + ": " + line);
        }
    }
    if (deg.empty()) throw std::invalid_argument("algebra has no basis");
    const int d = deg.rbegin()->first + 1;
    if (static_cast<int>(deg.size()) != d || deg.begin()->first != 0)
        throw std::invalid_argument("degrees must be given for indices 1..dim");
    IVec degs(d);
    std::vector<std::string> labels(d);
    for (const auto& [i, v] : deg) {
        degs[i] = v;
        labels[i] = "x" + std::to_string(i + 1);
    }
    for (auto& e : br) e.c.canonicalize();
    if (!haveN)
        for (int i = 0; i < d; ++i)
            if (degs[i] < 0) nb.push_back(i);
    return make_algebra("custom", labels, degs, br, nb);
}

Envelope::Envelope(GradedLieAlgebra L) : L_(std::move(L)) {
    rank_.assign(L_.dim(), -1);
    for (int i : L_.b_basis) order_.push_back(i);
    for (int i : L_.n_basis) order_.push_back(i);
    for (size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = static_cast<int>(r);
}

bool Envelope::is_pbw(const Word& w) const {
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (rank_[w[k]] > rank_[w[k + 1]]) return false;
    return true;
}

UElt Envelope::word(const Word& w) const {
    size_t k = 0;
    while (k + 1 < w.size() && rank_[w[k]] <= rank_[w[k + 1]]) ++k;
    if (k + 1 >= w.size()) return {{w, Q(1)}};
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    // x_a x_b = x_b x_a + [x_a, x_b] at the first inversion
    Word swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    UElt out = word(swapped);
    for (const auto& [c, v] : L_.br[w[k]][w[k + 1]]) {
        Word shorter(w.begin(), w.begin() + k);
        shorter.push_back(c);
        shorter.insert(shorter.end(), w.begin() + k + 2, w.end());
        add_to(out, word(shorter), v);
    }
    memo_.emplace(w, out);
    return out;
}

UElt Envelope::mul(const UElt& a, const UElt& b) const {
    UElt out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            add_to(out, word(w), ca * cb);
        }
    return out;
}

UElt Envelope::commutator(const UElt& a, const UElt& b) const {
    UElt out = mul(a, b);
    add_to(out, mul(b, a), -1);
    return out;
}

int Envelope::abs_degree(const Word& w) const {
    int s = 0;
    for (int i : w) s += std::abs(L_.deg[i]);
    return s;
}

std::vector<Word> Envelope::monomials_of_degree(const IVec& basis, int d) const {
    IVec sorted = basis;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
    std::vector<Word> out;
    Word cur;
    // depth-first over nondecreasing positions in the sorted basis
    std::function<void(size_t, int)> rec = [&](size_t start, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t p = start; p < sorted.size(); ++p) {
            const int w = std::abs(L_.deg[sorted[p]]);
            if (w == 0) throw std::invalid_argument("degree enumeration needs nonzero degrees");
            if (w > left) continue;
            cur.push_back(sorted[p]);
            rec(p, left - w);
            cur.pop_back();
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> Envelope::monomials_up_to_length(const IVec& basis, int len) const {
    IVec sorted = basis;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return rank_[a] < rank_[b]; });
    std::vector<Word> out{{}};
    std::vector<Word> layer{{}};
    for (int l = 1; l <= len; ++l) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            const size_t start =
                w.empty() ? 0 : std::find(sorted.begin(), sorted.end(), w.back()) - sorted.begin();
            for (size_t p = start; p < sorted.size(); ++p) {
                Word x = w;
                x.push_back(sorted[p]);
                next.push_back(x);
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

std::string Envelope::format(const UElt& u) const {
    if (u.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : u) {
        const bool neg = c < 0;
        const Q a = neg ? Q(-c) : c;
        if (!first || neg) os << (neg ? "-" : "+");
        first = false;
        if (w.empty()) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        for (size_t k = 0; k < w.size(); ++k) os << (k ? "." : "") << L_.labels[w[k]];
    }
    return os.str();
}

}  // namespace affine
