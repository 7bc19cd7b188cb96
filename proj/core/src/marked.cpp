#include "innerinv/marked.hpp"

#include <algorithm>
#include <map>

namespace innerinv {

bool Marking::contains(int i) const {
    return std::binary_search(marked.begin(), marked.end(), i);
}

std::vector<Marking> markedSubsets(int n, bool requireNonempty) {
    if (n < 1) throw std::invalid_argument("markedSubsets needs n >= 1");
    std::vector<Marking> out;
    for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
        if (bits & (bits >> 1)) continue; // adjacent pair
        if (requireNonempty && bits == 0) continue;
        Marking m;
        m.n = n;
        for (int i = 0; i < n; ++i)
            if (bits & (1ul << i)) m.marked.push_back(i + 1);
        out.push_back(std::move(m));
    }
    return out;
}

long long fibonacci(int k) {
    long long a = 1, b = 1; // F_1, F_2
    if (k <= 2) return 1;
    for (int i = 3; i <= k; ++i) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

AlphabetPtr pstqAlphabet() {
    static AlphabetPtr a = Alphabet::freeSymbols({"p", "s", "t", "q"});
    return a;
}

std::vector<SignedTerm> buildS(int n, const AlphabetPtr& pstq) {
    if (n < 2) throw std::invalid_argument("buildS needs n >= 2");
    GenId p = pstq->id("p"), s = pstq->id("s"), t = pstq->id("t"), q = pstq->id("q");
    Poly ps = Poly::monomial(pstq, Word{{p, s}}, 1);
    Poly tp = Poly::monomial(pstq, Word{{t, p}}, 1);
    Poly both = ps + tp;
    Poly qP = Poly::monomial(pstq, Word{{q}}, 1);

    enum Gap { PS, TP, BOTH };
    std::vector<SignedTerm> out;
    std::vector<int> gaps(n - 1, 0);
    long total = 1;
    for (int i = 0; i < n - 1; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n - 1; ++i) {
            gaps[i] = (int)(c % 3);
            c /= 3;
        }
        // Adjacency constraints of the insertion procedure: a q preceded by
        // (tp) is followed by (ps) or final; a q followed by (ps) is
        // preceded by (tp) or initial.
        bool valid = true;
        for (int i = 0; i < n - 1 && valid; ++i) {
            if (gaps[i] == TP && !(i + 1 == n - 1 || gaps[i + 1] == PS)) valid = false;
            if (gaps[i] == PS && !(i == 0 || gaps[i - 1] == TP)) valid = false;
        }
        if (!valid) continue;

        // Marked q's: initial followed by (ps), interior with (tp)..(ps),
        // final preceded by (tp). d = |marking| gives the sign (−1)^d.
        Marking mk;
        mk.n = n;
        for (int i = 1; i <= n; ++i) {
            bool before_tp = i >= 2 && gaps[i - 2] == TP;
            bool after_ps = i <= n - 1 && gaps[i - 1] == PS;
            if ((i == 1 && after_ps) || (before_tp && after_ps) || (i == n && before_tp))
                mk.marked.push_back(i);
        }
        Poly value = qP;
        for (int i = 0; i < n - 1; ++i) {
            const Poly& gap = gaps[i] == PS ? ps : gaps[i] == TP ? tp : both;
            value = freeMultiply(value, gap);
            value = freeMultiply(value, qP);
        }
        int sign = (mk.marked.size() % 2 == 0) ? 1 : -1;
        out.push_back({sign, std::move(value), std::move(mk)});
    }
    return out;
}

std::vector<InsertionTuple> insertionTuples(int n) {
    if (n < 1) throw std::invalid_argument("insertionTuples needs n >= 1");
    enum { X, Y, B };
    std::vector<InsertionTuple> out;
    std::vector<int> choice(n, 0);
    long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < n; ++i) {
            choice[i] = (int)(c % 3);
            c /= 3;
        }
        bool valid = true;
        for (int i = 0; i < n && valid; ++i) {
            if (choice[i] == X && i < n - 1 && choice[i + 1] != Y) valid = false;
            if (choice[i] == Y && i > 0 && choice[i - 1] != X) valid = false;
        }
        if (!valid) continue;
        int m = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (choice[i] == X && choice[i + 1] == Y) ++m;
        if (choice[0] == Y) ++m;
        if (choice[n - 1] == X) ++m;
        out.push_back({choice, m % 2 ? -1 : 1});
    }
    return out;
}

namespace {

/// Partition-expressed element as a polynomial over the R' alphabet:
/// labels become letters, the unit the empty word.
Poly expressedPoly(const BasedAlgebra& R, const PartitionedBasis& pb,
                   const AlphabetPtr& alpha, const RElement& e) {
    RElement x = pb.express(R, e);
    Poly f(alpha);
    f.addTerm(Word::one(), x.unit);
    for (const auto& [l, c] : x.coef) f.addTerm(Word::single(alpha->id(l)), c);
    return f;
}

} // namespace

std::vector<SignedTerm> tTerms(const BasedAlgebra& R, const PartitionedBasis& pb,
                               const AlphabetPtr& alpha, GenId q,
                               const std::string& xp, int n,
                               const std::string& py) {
    if (!pb.inLeftDivisiblePart(xp))
        throw std::invalid_argument(xp + " is not in B_{++} ∪ B_{-+}");
    if (!pb.inRightDivisiblePart(py))
        throw std::invalid_argument(py + " is not in B_{++} ∪ B_{+-}");
    if (n < 1) throw std::invalid_argument("tTerms needs n >= 1");
    if (pb.tag.kind != CaseKind::Intermediate && n > 1)
        throw std::invalid_argument("tTerms with n >= 2 needs Intermediate data (s, t)");

    const RElement& xpElt = pb.expansion.at(xp);
    const RElement& pyElt = pb.expansion.at(py);
    Poly qPoly = Poly::monomial(alpha, Word::single(q), 1);
    Poly xpPoly = Poly::monomial(alpha, Word::single(alpha->id(xp)), 1);
    Poly pyPoly = Poly::monomial(alpha, Word::single(alpha->id(py)), 1);

    std::vector<SignedTerm> out;
    if (n == 1) {
        // (xp) q (py) ↦ (xpy)_R with y a right factor of py; the value
        // depends only on the basis elements, not on the chosen y.
        RElement xpy = R.multiply(xpElt, pb.rightFactor.at(py));
        Marking mk;
        mk.n = 1;
        mk.marked = {1};
        out.push_back({1, expressedPoly(R, pb, alpha, xpy), std::move(mk)});
        return out;
    }

    const RElement& s = *pb.tag.s;
    const RElement& t = *pb.tag.t;
    RElement xps = R.multiply(xpElt, s);
    RElement tps = R.multiply(R.multiply(t, R.distinguishedP()), s);
    RElement tpy = R.multiply(t, pyElt);
    Poly xpsPoly = expressedPoly(R, pb, alpha, xps);
    Poly tpsPoly = expressedPoly(R, pb, alpha, tps);
    Poly tpyPoly = expressedPoly(R, pb, alpha, tpy);

    for (auto& mk : markedSubsets(n, true)) {
        Poly term = mk.contains(1) ? xpsPoly : freeMultiply(xpPoly, qPoly);
        for (int i = 2; i <= n - 1; ++i)
            term = freeMultiply(term, mk.contains(i) ? tpsPoly : qPoly);
        if (mk.contains(n))
            term = freeMultiply(term, tpyPoly);
        else
            term = freeMultiply(freeMultiply(term, qPoly), pyPoly);
        int sign = (mk.marked.size() % 2 == 0) ? -1 : 1;
        out.push_back({sign, std::move(term), std::move(mk)});
    }
    return out;
}

std::pair<Poly, Poly> splitTerms(const std::vector<SignedTerm>& terms,
                                 SplitMode mode) {
    Poly part1, part2;
    for (const auto& st : terms) {
        int boundary = mode == SplitMode::ByFinal ? st.marking.n : 1;
        Poly contrib = st.sign < 0 ? -st.value : st.value;
        if (st.marking.contains(boundary))
            part2 += contrib;
        else
            part1 += contrib;
    }
    return {part1, part2};
}

namespace {

using TermKey = std::string;

/// Signed multiset key: the sign is folded into the polynomial.
std::map<TermKey, int> multiset(const std::vector<SignedTerm>& terms) {
    std::map<TermKey, int> m;
    for (const auto& st : terms)
        ++m[renderPoly(st.sign < 0 ? -st.value : st.value)];
    return m;
}

std::vector<SignedTerm> appendFactor(const std::vector<SignedTerm>& terms,
                                     const Poly& factor, int signFlip) {
    std::vector<SignedTerm> out;
    for (const auto& st : terms)
        out.push_back({st.sign * signFlip, freeMultiply(st.value, factor), st.marking});
    return out;
}

std::vector<SignedTerm> sPrimeOf(const std::vector<SignedTerm>& sn) {
    std::vector<SignedTerm> out;
    for (const auto& st : sn)
        if (!st.marking.contains(st.marking.n)) out.push_back(st);
    return out;
}

} // namespace

SPrimeReport sPrimeCheck(int nMax) {
    if (nMax < 3) throw std::invalid_argument("sPrimeCheck needs nMax >= 3");
    SPrimeReport rep;
    rep.nMax = nMax;
    auto pstq = pstqAlphabet();
    GenId p = pstq->id("p"), s = pstq->id("s"), t = pstq->id("t"), q = pstq->id("q");
    Poly ps = Poly::monomial(pstq, Word{{p, s}}, 1);
    Poly tp = Poly::monomial(pstq, Word{{t, p}}, 1);
    Poly qP = Poly::monomial(pstq, Word{{q}}, 1);
    Poly bothQ = freeMultiply(ps + tp, qP);
    Poly tpQ = freeMultiply(tp, qP);
    Poly tpQpsQ = freeMultiply(tpQ, freeMultiply(ps, qP));

    // S'(1) = {q}; S'(n) for n >= 2 is the final-unmarked part of S(n).
    std::vector<std::vector<SignedTerm>> sPrime(nMax + 1);
    sPrime[1] = {{1, qP, Marking{1, {}}}};
    std::vector<std::vector<SignedTerm>> sFull(nMax + 1);
    for (int n = 2; n <= nMax; ++n) {
        sFull[n] = buildS(n, pstq);
        sPrime[n] = sPrimeOf(sFull[n]);
    }

    auto expect = [&](int n, const std::string& what, const std::map<TermKey, int>& got,
                      const std::map<TermKey, int>& want) {
        if (got != want)
            rep.mismatches.push_back(what + " fails at n=" + std::to_string(n));
    };

    for (int n = 3; n <= nMax; ++n) {
        // S(n) = S'(n) ∪ −S'(n−1)(tp)q
        auto rhs = sPrime[n];
        auto extra = appendFactor(sPrime[n - 1], tpQ, -1);
        rhs.insert(rhs.end(), extra.begin(), extra.end());
        expect(n, "S(n) = S'(n) ∪ -S'(n-1)(tp)q", multiset(sFull[n]), multiset(rhs));

        // S'(n) = S'(n−1)(ps+tp)q ∪ −S'(n−2)(tp)q(ps)q
        auto rec = appendFactor(sPrime[n - 1], bothQ, 1);
        auto rec2 = appendFactor(sPrime[n - 2], tpQpsQ, -1);
        rec.insert(rec.end(), rec2.begin(), rec2.end());
        expect(n, "S'(n) recursion", multiset(sPrime[n]), multiset(rec));
    }
    return rep;
}

} // namespace innerinv
