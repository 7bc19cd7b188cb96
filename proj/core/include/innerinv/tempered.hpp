#pragma once

#include "innerinv/inner_inverse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace innerinv {

/// Combination of module basis labels; expansion on C is unique.
struct ModuleElement {
    std::map<std::string, Rational> coef;

    bool isZero() const { return coef.empty(); }
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator*=(const Rational& c);
    friend ModuleElement operator*(const Rational& c, ModuleElement m) { return m *= c; }
    bool operator==(const ModuleElement& o) const { return coef == o.coef; }
    static ModuleElement basis(const std::string& l, Rational c = Rational(1)) {
        ModuleElement m;
        if (c != 0) m.coef.emplace(l, std::move(c));
        return m;
    }
};

/// Right module with distinguished subspace M₊ = span(Cplus). The action
/// table is over (module label, algebra basis label); the unit acts as
/// identity.
struct TemperedModule {
    std::vector<std::string> cplus, cminus;
    std::map<std::pair<std::string, std::string>, ModuleElement> action;

    std::vector<std::string> allLabels() const;
    bool inPlus(const std::string& l) const;
    int dim() const { return (int)(cplus.size() + cminus.size()); }

    ModuleElement act(const ModuleElement& m, const RElement& r) const;
    QVec coords(const ModuleElement& m) const;   // cplus first, then cminus
    ModuleElement fromCoords(const QVec& v) const;
    /// True iff the element lies in span(Cplus).
    bool inPlusSpan(const ModuleElement& m) const;
};

/// Verdicts for the three closure conditions of a p-tempered module:
/// M₊ ⊇ Mp, M₊ annihilated by the right annihilator of p, and M₊ closed
/// under {x ∈ R | px ∈ Rp}. Also checks the right-module axioms first.
struct TemperedReport {
    bool moduleAxioms = true;
    bool containsMp = true;
    bool annihilatorKills = true;
    bool closedUnderSubring = true;
    std::vector<std::string> witnesses;
    bool valid() const {
        return moduleAxioms && containsMp && annihilatorKills && closedUnderSubring;
    }
};
TemperedReport validateTempered(const BasedAlgebra& R, const TemperedModule& M);

/// Representatives completing a basis of U to one of V (both given by
/// spanning rows). Throws if U is not contained in V.
QMat relativeBasis(const QMat& vGens, const QMat& uGens);

/// The ring system extended by module reductions: xy ↦ (xy)_M for x ∈ C,
/// and the q-absorbing rules with a Cplus label leftmost (single rule in
/// Case A; schema twins of (xppy n)/(xpTP n) in Case C).
struct ModuleSystem {
    InnerInverseSystem ring;
    TemperedModule module;
    AlphabetPtr alpha; // ring letters, then module letters
    ReductionSystem sys;

    GenId moduleLetter(const std::string& label) const { return alpha->id(label); }
    Poly elementPoly(const ModuleElement& m) const;
};
ModuleSystem buildModuleSystem(const InnerInverseSystem& ring, const TemperedModule& m);

Poly moduleNormalForm(const Poly& expr, const ModuleSystem& ms,
                      NFStrategy strategy = NFStrategy::leftmost());

/// NF(c·q·p) = c exactly for c ∈ span(Cplus), and irreducible otherwise;
/// also checks the canonical map M → (M,M₊)⊗R' is injective on C.
struct RecoveryReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
RecoveryReport checkMPlusRecovery(const ModuleSystem& ms);

/// Morphism h given by images of M's labels in N. Tests h one-to-one and
/// M₊ = h⁻¹(N₊); on failure exhibits the element the induced map kills
/// (y(1−qp), or a kernel vector of h itself).
struct InducedEmbeddingReport {
    bool injectiveH = false;
    bool plusPullback = false;
    bool inducedInjective = false;
    std::optional<Poly> kernelWitness; // over M's module alphabet
    std::string detail;
};
InducedEmbeddingReport checkInducedEmbedding(
    const ModuleSystem& msM, const ModuleSystem& msN,
    const std::map<std::string, ModuleElement>& h);

} // namespace innerinv
