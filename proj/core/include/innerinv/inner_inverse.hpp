#pragma once

#include "innerinv/based_algebra.hpp"
#include "innerinv/marked.hpp"
#include "innerinv/rewrite.hpp"

#include <memory>

namespace innerinv {

/// The reduction system presenting R' = R<q | pqp = p> over the alphabet
/// B ∪ {q}, with the letters tagged by their partition part.
struct InnerInverseSystem {
    BasedAlgebraPtr algebra;
    PartitionedBasis pb;
    AlphabetPtr alpha; // partition labels followed by "q"
    GenId q = -1;
    ReductionSystem sys;
    CaseKind caseKind = CaseKind::NotReached;

    GenId letter(const std::string& label) const { return alpha->id(label); }
    /// Partition-expressed element as a combination of letter words.
    Poly elementPoly(const RElement& e) const;
};

/// Case A (Theorem on 1 ∉ pR+Rp): rules xy ↦ (xy)_R and
/// (xp) q (py) ↦ (xpy)_R, ordered by word length.
InnerInverseSystem buildCaseA(BasedAlgebraPtr R, const PartitionedBasis& pb);

/// Case B (1 ∈ pR, 1 ∉ Rp): rules xy ↦ (xy)_R and (xp) q ↦ x_R with
/// x = (xp)·q0 for the stored right inverse q0. LeftInvertible input is
/// rejected: transform through BasedAlgebra::opposite first.
InnerInverseSystem buildCaseB(BasedAlgebraPtr R, const PartitionedBasis& pb);

/// Case C (1 ∈ pR+Rp − (pR ∪ Rp)): explicit rules xy ↦ (xy)_R and
/// (ps) ↦ 1 − (tp), plus the two schema families (xppy n) and (xpTP n),
/// under the 3-tuple ordering (#q, #B, #ps).
InnerInverseSystem buildCaseC(BasedAlgebraPtr R, const PartitionedBasis& pb);

/// Case A rules plus q p q ↦ q: presents R'' = R<q | pqp=p, qpq=q>.
/// Requires p ≠ 0.
InnerInverseSystem buildMutualOverR(BasedAlgebraPtr R, const PartitionedBasis& pb);

/// The algebra T freely generated by R and S subject to pqp = p, qpq = q,
/// both algebras in Case A with nonzero distinguished elements. Labels are
/// prefixed on collision.
struct MutualSystem {
    BasedAlgebraPtr algR, algS;
    PartitionedBasis pbR, pbS;
    AlphabetPtr alpha;
    ReductionSystem sys;
    std::string prefixR, prefixS; // label decoration, empty if none needed
};
MutualSystem buildMutualJoin(BasedAlgebraPtr R, const PartitionedBasis& pbR,
                             BasedAlgebraPtr S, const PartitionedBasis& pbS);

enum class SchemaKind { XPPY, XPTP };

/// Materializes one (xppy n) or (xpTP n) rule of a Case C system.
/// XPPY: (xp) q^n (py) ↦ Σ tTerms; XPTP: (xp) q^n (tp) ↦ (xp) q^n − Σ
/// tTerms(xp, n, ps).
Rule schemaRule(const InnerInverseSystem& cc, SchemaKind kind,
                const std::string& xp, int n,
                const std::optional<std::string>& py = std::nullopt);

/// Builds the system the algebra's case calls for (dispatcher used by the
/// CLI); LeftInvertible is served by the opposite algebra with words
/// reversed by the caller.
InnerInverseSystem buildForCase(BasedAlgebraPtr R, const PartitionedBasis& pb);

} // namespace innerinv
