#pragma once

#include "innerinv/linalg.hpp"
#include "innerinv/poly.hpp"
#include "innerinv/rewrite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace innerinv {

/// Element of a based algebra: finitely supported combination of basis
/// labels plus a unit coefficient. Which basis the labels refer to is
/// contextual (table basis or partition labels).
struct RElement {
    Rational unit;
    std::map<std::string, Rational> coef;

    bool isZero() const;
    RElement& operator+=(const RElement& o);
    RElement& operator-=(const RElement& o);
    RElement& operator*=(const Rational& c);
    friend RElement operator+(RElement a, const RElement& b) { return a += b; }
    friend RElement operator-(RElement a, const RElement& b) { return a -= b; }
    friend RElement operator*(const Rational& c, RElement a) { return a *= c; }
    bool operator==(const RElement& o) const;

    static RElement one() { RElement e; e.unit = 1; return e; }
    static RElement basis(const std::string& label, Rational c = Rational(1)) {
        RElement e;
        if (c != 0) e.coef.emplace(label, std::move(c));
        return e;
    }
};

/// Unit first, then labels lexicographically.
std::string renderRElement(const RElement& e);

enum class CaseKind {
    NotReached,          // 1 ∉ pR+Rp
    RightInvertible,     // 1 ∈ pR, 1 ∉ Rp
    LeftInvertible,      // 1 ∈ Rp, 1 ∉ pR
    TwoSidedInvertible,  // p invertible; adjunction leaves R unchanged
    Intermediate,        // 1 ∈ pR+Rp, 1 ∉ pR ∪ Rp
};

std::string caseName(CaseKind k);

/// Intermediate carries witnesses with ps + tp = 1.
struct CaseTag {
    CaseKind kind = CaseKind::NotReached;
    std::optional<RElement> s, t;
};

/// An algebra presented either by a finite structure-constant table or by
/// its own confluent rewriting system (lazily based), with distinguished p.
class BasedAlgebra {
public:
    /// Finite table over `basis` labels. `unitExpansion` gives 1 as a
    /// combination of basis elements when 1 lies in their span; otherwise
    /// the unit is an independent coordinate. Associativity and unit laws
    /// are checked exhaustively at construction.
    static std::shared_ptr<const BasedAlgebra> finiteTable(
        std::vector<std::string> basis,
        std::map<std::pair<int, int>, RElement> table,
        std::optional<std::map<std::string, Rational>> unitExpansion,
        RElement p);

    /// Infinite-dimensional algebra carried by an internal confluent
    /// reduction system over single-character generators. Basis labels are
    /// the irreducible words spelled out (e.g. "vu"), the empty word being
    /// the unit. The internal system must pass checkTermination and resolve
    /// all its ambiguities; both are verified here.
    static std::shared_ptr<const BasedAlgebra> confluentPresented(
        AlphabetPtr gens, ReductionSystem internal, RElement p);

    bool isFiniteTable() const { return finite_; }
    const std::vector<std::string>& basisLabels() const { return basis_; }
    const RElement& distinguishedP() const { return p_; }
    bool unitInSpan() const { return unitExp_.has_value(); }

    /// Product in R, canonically expanded (table basis ∪ unit; presented:
    /// irreducible-word labels).
    RElement multiply(const RElement& a, const RElement& b) const;

    /// Value in R of a free-algebra expression whose letters are basis
    /// labels (or, with `extra`, any label it can expand).
    RElement eval(const Poly& f,
                  const std::map<std::string, RElement>* extra = nullptr) const;

    /// Coordinates for exact linear algebra. Finite tables only.
    int coordDim() const;
    QVec coords(const RElement& e) const;
    RElement fromCoords(const QVec& v) const;
    QVec unitVector() const { return coords(RElement::one()); }

    /// Transposed structure constants (or reversed words); same p.
    std::shared_ptr<const BasedAlgebra> opposite() const;

    // Presented-algebra services.
    const ReductionSystem& internalSystem() const;
    const AlphabetPtr& generatorAlphabet() const { return gens_; }
    bool isBasisWord(const Word& w) const;
    std::string labelOfWord(const Word& w) const;
    Word wordOfLabel(const std::string& label) const;
    /// Irreducible words of length <= maxLen, as labels (unit excluded).
    std::vector<std::string> basisWordsUpTo(int maxLen) const;

private:
    BasedAlgebra() = default;
    RElement canonical(RElement e) const;

    bool finite_ = true;
    std::vector<std::string> basis_;
    std::map<std::string, int> basisIndex_;
    std::vector<std::vector<RElement>> table_;
    std::optional<std::map<std::string, Rational>> unitExp_;
    RElement p_;

    AlphabetPtr gens_;
    std::shared_ptr<ReductionSystem> internal_;
};

using BasedAlgebraPtr = std::shared_ptr<const BasedAlgebra>;

/// The paper's B_{++}/B_{+-}/B_{-+}/B_{--} partition with divisibility
/// witnesses. Labels either reuse table-basis labels (when the
/// representative is that basis vector) or are fresh "g<i>" names with the
/// expansion recorded.
struct PartitionedBasis {
    std::vector<std::string> bpp, bpm, bmp, bmm;
    std::map<std::string, RElement> expansion;   // every partition label
    std::map<std::string, RElement> leftFactor;  // x with x·p = elt, for bpp ∪ bmp
    std::map<std::string, RElement> rightFactor; // y with p·y = elt, for bpp ∪ bpm
    CaseTag tag;
    std::optional<std::string> designatedPS, designatedTP; // Intermediate only
    std::optional<RElement> rightInverse;                  // Case B: q0 with p·q0 = 1

    std::vector<std::string> allLabels() const;
    bool inLeftDivisiblePart(const std::string& label) const;  // bpp ∪ bmp
    bool inRightDivisiblePart(const std::string& label) const; // bpp ∪ bpm

    /// Expression of an element over partition labels ∪ {1}; in the
    /// Intermediate case the designated ps is excluded, per the one linear
    /// relation ps = 1 − tp.
    RElement express(const BasedAlgebra& R, const RElement& e) const;
};

/// Echelonized divisibility data for a finite-table algebra.
struct DivisibilityReport {
    linalg::Subspace pR, Rp, cap, plus; // cap = pR∩Rp, plus = pR+Rp
    CaseTag tag;
};

/// Computes pR, Rp, pR∩Rp, pR+Rp and classifies where 1 first appears.
/// Intermediate solves ps + tp = 1 for s, t (free variables zero).
DivisibilityReport analyzeDivisibility(const BasedAlgebra& R);

/// Builds the partition for the given case. Representatives come from
/// reduced row echelon form with candidates in input basis order; p (and
/// ps, tp) are forced into their parts by being placed first.
PartitionedBasis buildPartitionedBasis(const BasedAlgebra& R, const CaseTag& tag);

/// Witness / sanity validation for a (possibly manually supplied)
/// partition: x·p and p·y are recomputed exactly; presented algebras are
/// checked label by label up to whatever slice was supplied.
struct PartitionCheck {
    bool ok = true;
    std::vector<std::string> failures;
};
PartitionCheck validatePartition(const BasedAlgebra& R, const PartitionedBasis& pb);

} // namespace innerinv
