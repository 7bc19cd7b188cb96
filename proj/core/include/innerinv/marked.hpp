#pragma once

#include "innerinv/based_algebra.hpp"
#include "innerinv/poly.hpp"

#include <optional>
#include <vector>

namespace innerinv {

/// Subset of positions 1..n with no two adjacent members.
struct Marking {
    int n = 0;
    std::vector<int> marked; // ascending

    bool contains(int i) const;
};

struct SignedTerm {
    int sign = 1;     // −1 iff the marking has even cardinality
    Poly value;
    Marking marking;
};

/// All subsets of 1..n with no two adjacent positions, enumerated by
/// increasing bitset value. Count is F_{n+2} with the empty set, F_{n+2}−1
/// without (F_1 = F_2 = 1).
std::vector<Marking> markedSubsets(int n, bool requireNonempty);

long long fibonacci(int k);

/// The set S(n) over the free algebra k<p,s,t,q>: q^n with (ps+tp), (ps) or
/// (tp) inserted between successive q's subject to the adjacency
/// constraints, each element signed (−1)^d. The sum of the returned terms
/// is 0, which tests verify by expansion.
std::vector<SignedTerm> buildS(int n, const AlphabetPtr& pstq);

AlphabetPtr pstqAlphabet();

/// One choice per slot: 0 = x, 1 = y, 2 = x+y.
struct InsertionTuple {
    std::vector<int> choice;
    int sign = 1;
};

/// Valid tuples: an x in a nonfinal position is followed by y; a y in a
/// noninitial position is preceded by x. The sign is − iff
/// #("x,y" substrings) + #(initial y) + #(final x) is odd.
std::vector<InsertionTuple> insertionTuples(int n);

/// Σ over the tuple set of ±mu(a_1..a_n) with a_i ∈ {x, y, x+y}; zero for
/// every genuinely n-linear mu.
template <class V, class Mu>
auto multilinearIdentity(int n, const V& x, const V& y, Mu&& mu)
    -> decltype(mu(std::declval<const std::vector<V>&>())) {
    using W = decltype(mu(std::declval<const std::vector<V>&>()));
    V xy = x + y;
    std::optional<W> acc;
    for (const auto& t : insertionTuples(n)) {
        std::vector<V> args;
        args.reserve(n);
        for (int c : t.choice) args.push_back(c == 0 ? x : c == 1 ? y : xy);
        W v = mu(args);
        if (t.sign < 0) v = -v;
        if (acc)
            *acc += v;
        else
            acc = std::move(v);
    }
    return *acc;
}

/// The terms T((xp), n, (py)) of the (xppy n) rule output: one term per
/// nonempty non-adjacent marking of the q-string. A marked initial q turns
/// (xp)q into (xps)_R; a marked final q turns q(py) into (tpy)_R; interior
/// marked q's become (tps)_R. n = 1 yields the single term (xpy)_R.
/// Values are polynomials over the R' alphabet `alpha` whose letters are
/// the partition labels plus q.
std::vector<SignedTerm> tTerms(const BasedAlgebra& R, const PartitionedBasis& pb,
                               const AlphabetPtr& alpha, GenId q,
                               const std::string& xp, int n,
                               const std::string& py);

enum class SplitMode { ByFinal, ByInitial };

/// Splits a tTerms list by whether the final (resp. initial) q is marked;
/// the two sums recombine to the original total.
std::pair<Poly, Poly> splitTerms(const std::vector<SignedTerm>& terms,
                                 SplitMode mode);

/// Verifies, as multisets of signed free-algebra terms, the recursion
/// S'(n) = S'(n−1)(ps+tp)q ∪ −S'(n−2)(tp)q(ps)q with base S'(1) = {q},
/// S'(2) = {q(ps+tp)q, −q(ps)q}, and the decomposition
/// S(n) = S'(n) ∪ −S'(n−1)(tp)q, for 3 ≤ n ≤ nMax.
struct SPrimeReport {
    int nMax = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};
SPrimeReport sPrimeCheck(int nMax);

} // namespace innerinv
