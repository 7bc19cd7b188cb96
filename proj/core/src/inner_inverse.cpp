#include "innerinv/inner_inverse.hpp"

#include <algorithm>

namespace innerinv {

namespace {

AlphabetPtr systemAlphabet(const PartitionedBasis& pb) {
    std::vector<Gen> gens;
    for (const auto& l : pb.allLabels()) {
        if (l == "q")
            throw std::invalid_argument("basis label 'q' collides with the adjoined inverse");
        gens.push_back({l, GenKind::BasisElement});
    }
    gens.push_back({"q", GenKind::AdjoinedQ});
    return std::make_shared<const Alphabet>(std::move(gens));
}

Poly expressed(const BasedAlgebra& R, const PartitionedBasis& pb,
               const AlphabetPtr& alpha, const RElement& e) {
    RElement x = pb.express(R, e);
    Poly f(alpha);
    f.addTerm(Word::one(), x.unit);
    for (const auto& [l, c] : x.coef) f.addTerm(Word::single(alpha->id(l)), c);
    return f;
}

/// xy ↦ (xy)_R for all pairs of partition labels. Products that leave a
/// manually supplied slice (presented algebras) are skipped; finite tables
/// always materialize the full square.
void addProductRules(const BasedAlgebra& R, const PartitionedBasis& pb,
                     const AlphabetPtr& alpha, std::vector<Rule>& rules) {
    auto labels = pb.allLabels();
    for (const auto& x : labels) {
        for (const auto& y : labels) {
            RElement prod = R.multiply(pb.expansion.at(x), pb.expansion.at(y));
            try {
                Poly out = expressed(R, pb, alpha, prod);
                rules.push_back({Word{{alpha->id(x), alpha->id(y)}}, std::move(out), "xy"});
            } catch (const std::out_of_range&) {
                // outside the supplied slice
            }
        }
    }
}

} // namespace

Poly InnerInverseSystem::elementPoly(const RElement& e) const {
    return expressed(*algebra, pb, alpha, e);
}

InnerInverseSystem buildCaseA(BasedAlgebraPtr R, const PartitionedBasis& pb) {
    if (pb.tag.kind != CaseKind::NotReached)
        throw std::invalid_argument("buildCaseA needs case NotReached, got " +
                                    caseName(pb.tag.kind));
    InnerInverseSystem s;
    s.algebra = std::move(R);
    s.pb = pb;
    s.alpha = systemAlphabet(pb);
    s.q = s.alpha->id("q");
    s.caseKind = CaseKind::NotReached;
    s.sys.alpha = s.alpha;
    s.sys.ordering = lengthOrdering();

    addProductRules(*s.algebra, s.pb, s.alpha, s.sys.rules);
    for (const auto& xp : pb.allLabels()) {
        if (!pb.inLeftDivisiblePart(xp)) continue;
        for (const auto& py : pb.allLabels()) {
            if (!pb.inRightDivisiblePart(py)) continue;
            RElement xpy =
                s.algebra->multiply(pb.expansion.at(xp), pb.rightFactor.at(py));
            try {
                Poly out = expressed(*s.algebra, pb, s.alpha, xpy);
                s.sys.rules.push_back(
                    {Word{{s.alpha->id(xp), s.q, s.alpha->id(py)}}, std::move(out),
                     "xpqpy"});
            } catch (const std::out_of_range&) {
            }
        }
    }
    return s;
}

InnerInverseSystem buildCaseB(BasedAlgebraPtr R, const PartitionedBasis& pb) {
    if (pb.tag.kind == CaseKind::LeftInvertible)
        throw std::invalid_argument(
            "LeftInvertible: build Case B on BasedAlgebra::opposite and reverse words");
    if (pb.tag.kind == CaseKind::TwoSidedInvertible)
        throw std::invalid_argument(
            "p is invertible: adjunction of a universal inner inverse leaves R unchanged");
    if (pb.tag.kind != CaseKind::RightInvertible)
        throw std::invalid_argument("buildCaseB needs case RightInvertible, got " +
                                    caseName(pb.tag.kind));
    if (!pb.rightInverse)
        throw std::invalid_argument("Case B partition lacks the right inverse q0");

    InnerInverseSystem s;
    s.algebra = std::move(R);
    s.pb = pb;
    s.alpha = systemAlphabet(pb);
    s.q = s.alpha->id("q");
    s.caseKind = CaseKind::RightInvertible;
    s.sys.alpha = s.alpha;
    s.sys.ordering = lengthOrdering();

    addProductRules(*s.algebra, s.pb, s.alpha, s.sys.rules);
    // (xp) q ↦ x_R with x = (xp)·q0; the element xp determines x here.
    for (const auto& xp : pb.bpp) {
        RElement x = s.algebra->multiply(pb.expansion.at(xp), *pb.rightInverse);
        try {
            Poly out = expressed(*s.algebra, pb, s.alpha, x);
            s.sys.rules.push_back({Word{{s.alpha->id(xp), s.q}}, std::move(out), "xpq"});
        } catch (const std::out_of_range&) {
        }
    }
    return s;
}

namespace {

/// What the Case C schemas need; shared by the matcher/enumerator closures
/// so the system itself can be copied freely.
struct CaseCContext {
    BasedAlgebraPtr algebra;
    PartitionedBasis pb;
    AlphabetPtr alpha;
    GenId q;
};

Rule makeSchemaRule(const CaseCContext& cc, SchemaKind kind, const std::string& xp,
                    int n, const std::optional<std::string>& py) {
    if (n < 1) throw std::invalid_argument("schema index must be >= 1");
    const PartitionedBasis& pb = cc.pb;
    Word input;
    input.letters.push_back(cc.alpha->id(xp));
    for (int i = 0; i < n; ++i) input.letters.push_back(cc.q);

    if (kind == SchemaKind::XPPY) {
        if (!py) throw std::invalid_argument("(xppy n) needs a py label");
        input.letters.push_back(cc.alpha->id(*py));
        Poly out(cc.alpha);
        for (const auto& st : tTerms(*cc.algebra, pb, cc.alpha, cc.q, xp, n, *py))
            out += st.sign < 0 ? -st.value : st.value;
        return {std::move(input), std::move(out), "xppy" + std::to_string(n)};
    }

    input.letters.push_back(cc.alpha->id(*pb.designatedTP));
    // (xp) q^n (tp) ↦ (xp) q^n − Σ T((xp), n, (ps)); output terms may
    // themselves be reducible, which the ordering tolerates.
    Word head;
    head.letters.push_back(cc.alpha->id(xp));
    for (int i = 0; i < n; ++i) head.letters.push_back(cc.q);
    Poly out = Poly::monomial(cc.alpha, std::move(head), 1);
    for (const auto& st : tTerms(*cc.algebra, pb, cc.alpha, cc.q, xp, n, *pb.designatedPS))
        out -= st.sign < 0 ? -st.value : st.value;
    return {std::move(input), std::move(out), "xpTP" + std::to_string(n)};
}

} // namespace

Rule schemaRule(const InnerInverseSystem& cc, SchemaKind kind,
                const std::string& xp, int n,
                const std::optional<std::string>& py) {
    return makeSchemaRule({cc.algebra, cc.pb, cc.alpha, cc.q}, kind, xp, n, py);
}

InnerInverseSystem buildCaseC(BasedAlgebraPtr R, const PartitionedBasis& pb) {
    if (pb.tag.kind != CaseKind::Intermediate)
        throw std::invalid_argument("buildCaseC needs case Intermediate, got " +
                                    caseName(pb.tag.kind));
    if (!pb.designatedPS || !pb.designatedTP || !pb.tag.s || !pb.tag.t)
        throw std::invalid_argument("Intermediate partition lacks ps/tp data");

    InnerInverseSystem s;
    s.algebra = std::move(R);
    s.pb = pb;
    s.alpha = systemAlphabet(pb);
    s.q = s.alpha->id("q");
    s.caseKind = CaseKind::Intermediate;
    s.sys.alpha = s.alpha;

    auto ctx = std::make_shared<CaseCContext>(
        CaseCContext{s.algebra, s.pb, s.alpha, s.q});

    GenId psId = s.alpha->id(*pb.designatedPS);
    GenId tpId = s.alpha->id(*pb.designatedTP);
    GenId q = s.q;

    // 3-tuple ordering of the intermediate case: (#q, #B, #ps),
    // lexicographic.
    s.sys.ordering = {"q-count,B-count,ps-count", [q, psId](const Word& w) {
                          long long nq = 0, nb = 0, nps = 0;
                          for (GenId g : w.letters) {
                              if (g == q)
                                  ++nq;
                              else {
                                  ++nb;
                                  if (g == psId) ++nps;
                              }
                          }
                          return std::vector<long long>{nq, nb, nps};
                      }};

    addProductRules(*s.algebra, s.pb, s.alpha, s.sys.rules);
    // The one linear relation of the spanning set: (ps) ↦ 1 − (tp).
    {
        Poly out(s.alpha);
        out.addTerm(Word::one(), 1);
        out.addTerm(Word::single(tpId), -1);
        s.sys.rules.push_back({Word::single(psId), std::move(out), "ps"});
    }

    std::vector<std::string> leftLabels = pb.bpp;
    leftLabels.insert(leftLabels.end(), pb.bmp.begin(), pb.bmp.end());
    std::vector<std::string> rightLabels = pb.bpp;
    rightLabels.insert(rightLabels.end(), pb.bpm.begin(), pb.bpm.end());
    std::vector<GenId> leftIds, rightIds;
    for (const auto& l : leftLabels) leftIds.push_back(s.alpha->id(l));
    for (const auto& l : rightLabels) rightIds.push_back(s.alpha->id(l));

    auto isQRun = [q](const Word& w, std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i)
            if (w[i] != q) return false;
        return true;
    };

    RuleSchema xppy;
    xppy.name = "xppy";
    xppy.match = [ctx, leftIds, rightIds, isQRun](const Word& w) -> std::optional<Rule> {
        if (w.size() < 3) return std::nullopt;
        GenId first = w[0], last = w[w.size() - 1];
        if (std::find(leftIds.begin(), leftIds.end(), first) == leftIds.end())
            return std::nullopt;
        if (std::find(rightIds.begin(), rightIds.end(), last) == rightIds.end())
            return std::nullopt;
        if (!isQRun(w, 1, w.size() - 1)) return std::nullopt;
        int n = (int)w.size() - 2;
        return makeSchemaRule(*ctx, SchemaKind::XPPY, ctx->alpha->label(first), n,
                              ctx->alpha->label(last));
    };
    xppy.enumerate = [ctx, leftLabels, rightLabels](int bound) {
        std::vector<Rule> out;
        for (int n = 1; n <= bound; ++n)
            for (const auto& xp : leftLabels)
                for (const auto& py : rightLabels)
                    out.push_back(makeSchemaRule(*ctx, SchemaKind::XPPY, xp, n, py));
        return out;
    };
    s.sys.schemas.push_back(std::move(xppy));

    RuleSchema xptp;
    xptp.name = "xpTP";
    xptp.match = [ctx, tpId, leftIds, isQRun](const Word& w) -> std::optional<Rule> {
        if (w.size() < 3) return std::nullopt;
        if (w[w.size() - 1] != tpId) return std::nullopt;
        GenId first = w[0];
        if (std::find(leftIds.begin(), leftIds.end(), first) == leftIds.end())
            return std::nullopt;
        if (!isQRun(w, 1, w.size() - 1)) return std::nullopt;
        int n = (int)w.size() - 2;
        return makeSchemaRule(*ctx, SchemaKind::XPTP, ctx->alpha->label(first), n,
                              std::nullopt);
    };
    xptp.enumerate = [ctx, leftLabels](int bound) {
        std::vector<Rule> out;
        for (int n = 1; n <= bound; ++n)
            for (const auto& xp : leftLabels)
                out.push_back(makeSchemaRule(*ctx, SchemaKind::XPTP, xp, n, std::nullopt));
        return out;
    };
    s.sys.schemas.push_back(std::move(xptp));

    return s;
}

InnerInverseSystem buildMutualOverR(BasedAlgebraPtr R, const PartitionedBasis& pb) {
    if (R->distinguishedP().isZero())
        throw std::invalid_argument("mutual inner inverse requires p != 0");
    InnerInverseSystem s = buildCaseA(std::move(R), pb);
    GenId pId = s.alpha->id(s.pb.bpp.at(0)); // p is the first element of B_{++}
    Poly out = Poly::monomial(s.alpha, Word::single(s.q), 1);
    s.sys.rules.push_back({Word{{s.q, pId, s.q}}, std::move(out), "qpq"});
    return s;
}

MutualSystem buildMutualJoin(BasedAlgebraPtr R, const PartitionedBasis& pbR,
                             BasedAlgebraPtr S, const PartitionedBasis& pbS) {
    if (pbR.tag.kind != CaseKind::NotReached || pbS.tag.kind != CaseKind::NotReached)
        throw std::invalid_argument("the mutual join needs both algebras in case NotReached");
    if (R->distinguishedP().isZero() || S->distinguishedP().isZero())
        throw std::invalid_argument("the mutual join needs p != 0 and q != 0");

    auto labelsR = pbR.allLabels();
    auto labelsS = pbS.allLabels();
    bool collision = false;
    for (const auto& l : labelsS)
        if (std::find(labelsR.begin(), labelsR.end(), l) != labelsR.end()) collision = true;

    MutualSystem m;
    m.algR = std::move(R);
    m.algS = std::move(S);
    m.pbR = pbR;
    m.pbS = pbS;
    m.prefixR = collision ? "r:" : "";
    m.prefixS = collision ? "s:" : "";

    std::vector<Gen> gens;
    for (const auto& l : labelsR) gens.push_back({m.prefixR + l, GenKind::BasisElement});
    for (const auto& l : labelsS) gens.push_back({m.prefixS + l, GenKind::BasisElement});
    m.alpha = std::make_shared<const Alphabet>(std::move(gens));
    m.sys.alpha = m.alpha;
    m.sys.ordering = lengthOrdering();

    auto addSide = [&m](const BasedAlgebra& A, const PartitionedBasis& pb,
                        const std::string& prefix, GenId crossInverse,
                        const char* tagXY, const char* tagTriple) {
        auto express = [&](const RElement& e) {
            RElement x = pb.express(A, e);
            Poly f(m.alpha);
            f.addTerm(Word::one(), x.unit);
            for (const auto& [l, c] : x.coef)
                f.addTerm(Word::single(m.alpha->id(prefix + l)), c);
            return f;
        };
        for (const auto& x : pb.allLabels())
            for (const auto& y : pb.allLabels()) {
                RElement prod = A.multiply(pb.expansion.at(x), pb.expansion.at(y));
                m.sys.rules.push_back(
                    {Word{{m.alpha->id(prefix + x), m.alpha->id(prefix + y)}},
                     express(prod), tagXY});
            }
        for (const auto& xp : pb.allLabels()) {
            if (!pb.inLeftDivisiblePart(xp)) continue;
            for (const auto& py : pb.allLabels()) {
                if (!pb.inRightDivisiblePart(py)) continue;
                RElement xpy = A.multiply(pb.expansion.at(xp), pb.rightFactor.at(py));
                m.sys.rules.push_back(
                    {Word{{m.alpha->id(prefix + xp), crossInverse,
                           m.alpha->id(prefix + py)}},
                     express(xpy), tagTriple});
            }
        }
    };

    GenId qLetter = m.alpha->id(m.prefixS + m.pbS.bpp.at(0)); // q ∈ C_{++}
    GenId pLetter = m.alpha->id(m.prefixR + m.pbR.bpp.at(0)); // p ∈ B_{++}
    addSide(*m.algR, m.pbR, m.prefixR, qLetter, "xy", "xpqpy");
    addSide(*m.algS, m.pbS, m.prefixS, pLetter, "C:xy", "xqpqy");
    return m;
}

InnerInverseSystem buildForCase(BasedAlgebraPtr R, const PartitionedBasis& pb) {
    switch (pb.tag.kind) {
    case CaseKind::NotReached: return buildCaseA(std::move(R), pb);
    case CaseKind::RightInvertible: return buildCaseB(std::move(R), pb);
    case CaseKind::Intermediate: return buildCaseC(std::move(R), pb);
    case CaseKind::LeftInvertible:
        throw std::invalid_argument(
            "LeftInvertible: use the opposite algebra and reverse words");
    case CaseKind::TwoSidedInvertible:
        throw std::invalid_argument("p is invertible: R' = R, nothing to build");
    }
    throw std::logic_error("unreachable");
}

} // namespace innerinv
