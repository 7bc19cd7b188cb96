#pragma once

#include "innerinv/rational.hpp"

#include <optional>
#include <vector>

namespace innerinv {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

namespace linalg {

/// In-place reduced row echelon form; returns pivot column per surviving row.
/// Zero rows are dropped.
std::vector<int> rref(QMat& m);

int rank(QMat m);

/// Least-pivot particular solution of A x = b (free variables zero).
std::optional<QVec> solve(const QMat& a, const QVec& b);

/// Basis of {x : A x = 0}.
QMat kernel(const QMat& a);

/// Row space in RREF; empty matrix allowed.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(QMat gens, int ambient);

    int dim() const { return (int)rows_.size(); }
    int ambient() const { return ambient_; }
    const QMat& basis() const { return rows_; }

    bool contains(const QVec& v) const;
    /// Remainder of v after reduction against the echelon rows.
    QVec reduce(QVec v) const;

private:
    QMat rows_;
    std::vector<int> pivots_;
    int ambient_ = 0;
    friend Subspace sum(const Subspace&, const Subspace&);
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Representatives completing a basis of U to one of span(U ∪ gens).
/// Candidates are consumed in input order; each representative is the
/// echelon remainder of the generator, so results are deterministic.
QMat relativeComplement(const QMat& gens, const Subspace& u);

} // namespace linalg
} // namespace innerinv
