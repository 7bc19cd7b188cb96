#include "innerinv/linalg.hpp"

#include <stdexcept>

namespace innerinv {
namespace linalg {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back((int)col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

int rank(QMat m) { return (int)rref(m).size(); }

std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (const auto& x : b)
            if (x != 0) return std::nullopt;
        return QVec{};
    }
    std::size_t rows = a.size(), cols = a[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = b[r];
    }
    auto pivots = rref(aug);
    QVec x(cols, Rational(0));
    for (std::size_t r = 0; r < aug.size(); ++r) {
        int p = pivots[r];
        if (p == (int)cols) return std::nullopt; // inconsistent
        x[p] = aug[r][cols];
    }
    return x;
}

QMat kernel(const QMat& a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    QMat m = a;
    auto pivots = rref(m);
    std::vector<bool> isPivot(cols, false);
    for (int p : pivots) isPivot[p] = true;
    QMat ker;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        QVec v(cols, Rational(0));
        v[freeCol] = 1;
        for (std::size_t r = 0; r < m.size(); ++r)
            v[pivots[r]] = -m[r][freeCol];
        ker.push_back(std::move(v));
    }
    return ker;
}

Subspace::Subspace(QMat gens, int ambient) : ambient_(ambient) {
    for (auto& g : gens)
        if ((int)g.size() != ambient)
            throw std::invalid_argument("subspace generator of wrong dimension");
    rows_ = std::move(gens);
    pivots_ = rref(rows_);
}

QVec Subspace::reduce(QVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0) continue;
        Rational f = c;
        for (int k = 0; k < ambient_; ++k) v[k] -= f * rows_[r][k];
    }
    return v;
}

bool Subspace::contains(const QVec& v) const {
    QVec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw std::invalid_argument("subspace sum: ambient mismatch");
    QMat gens = a.rows_;
    gens.insert(gens.end(), b.rows_.begin(), b.rows_.end());
    return Subspace(std::move(gens), a.ambient_);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    // Solve sum_i x_i u_i = sum_j y_j v_j via the kernel of [U^T | -V^T].
    int n = a.ambient();
    if (n != b.ambient())
        throw std::invalid_argument("subspace intersect: ambient mismatch");
    int da = a.dim(), db = b.dim();
    if (da == 0 || db == 0) return Subspace({}, n);
    QMat sys(n, QVec(da + db, Rational(0)));
    for (int i = 0; i < da; ++i)
        for (int k = 0; k < n; ++k) sys[k][i] = a.basis()[i][k];
    for (int j = 0; j < db; ++j)
        for (int k = 0; k < n; ++k) sys[k][da + j] = -b.basis()[j][k];
    QMat ker = kernel(sys);
    QMat gens;
    for (const auto& v : ker) {
        QVec w(n, Rational(0));
        for (int i = 0; i < da; ++i)
            for (int k = 0; k < n; ++k) w[k] += v[i] * a.basis()[i][k];
        gens.push_back(std::move(w));
    }
    return Subspace(std::move(gens), n);
}

QMat relativeComplement(const QMat& gens, const Subspace& u) {
    QMat reps;
    Subspace cur = u;
    for (const auto& g : gens) {
        QVec r = cur.reduce(g);
        bool zero = true;
        for (const auto& x : r)
            if (x != 0) { zero = false; break; }
        if (zero) continue;
        reps.push_back(r);
        QMat rows = cur.basis();
        rows.push_back(r);
        cur = Subspace(std::move(rows), u.ambient());
    }
    return reps;
}

} // namespace linalg
} // namespace innerinv
