#include "innerinv/based_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace innerinv {

bool RElement::isZero() const { return unit == 0 && coef.empty(); }

RElement& RElement::operator+=(const RElement& o) {
    unit += o.unit;
    for (const auto& [l, c] : o.coef) {
        auto [it, fresh] = coef.emplace(l, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coef.erase(it);
        }
    }
    return *this;
}

RElement& RElement::operator-=(const RElement& o) {
    RElement neg = o;
    neg *= Rational(-1);
    return *this += neg;
}

RElement& RElement::operator*=(const Rational& c) {
    if (c == 0) {
        unit = 0;
        coef.clear();
        return *this;
    }
    unit *= c;
    for (auto& [l, v] : coef) v *= c;
    return *this;
}

bool RElement::operator==(const RElement& o) const {
    return unit == o.unit && coef == o.coef;
}

std::string renderRElement(const RElement& e) {
    if (e.isZero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Rational& c, const std::string& label) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1 || label.empty()) {
            out << renderRational(mag);
            if (!label.empty()) out << "·";
        }
        out << label;
    };
    if (e.unit != 0) emit(e.unit, "");
    for (const auto& [l, c] : e.coef) emit(c, l);
    return out.str();
}

std::string caseName(CaseKind k) {
    switch (k) {
    case CaseKind::NotReached: return "NotReached";
    case CaseKind::RightInvertible: return "RightInvertible";
    case CaseKind::LeftInvertible: return "LeftInvertible";
    case CaseKind::TwoSidedInvertible: return "TwoSidedInvertible";
    case CaseKind::Intermediate: return "Intermediate";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// BasedAlgebra

std::shared_ptr<const BasedAlgebra> BasedAlgebra::finiteTable(
    std::vector<std::string> basis,
    std::map<std::pair<int, int>, RElement> table,
    std::optional<std::map<std::string, Rational>> unitExpansion,
    RElement p) {
    auto R = std::shared_ptr<BasedAlgebra>(new BasedAlgebra());
    R->finite_ = true;
    R->basis_ = std::move(basis);
    for (int i = 0; i < (int)R->basis_.size(); ++i) {
        if (!R->basisIndex_.emplace(R->basis_[i], i).second)
            throw std::invalid_argument("duplicate basis label " + R->basis_[i]);
    }
    int n = (int)R->basis_.size();
    R->unitExp_ = std::move(unitExpansion);
    R->table_.assign(n, std::vector<RElement>(n));
    for (auto& [ij, e] : table) {
        auto [i, j] = ij;
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("table index out of range");
        R->table_[i][j] = R->canonical(std::move(e));
    }
    R->p_ = R->canonical(std::move(p));

    // Structure-constant sanity: associativity and unit laws, exhaustively.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RElement left = R->multiply(R->table_[i][j], RElement::basis(R->basis_[k]));
                RElement right = R->multiply(RElement::basis(R->basis_[i]), R->table_[j][k]);
                if (!(left == right))
                    throw std::invalid_argument(
                        "inconsistent structure constants: (" + R->basis_[i] + "·" +
                        R->basis_[j] + ")·" + R->basis_[k] + " != " + R->basis_[i] +
                        "·(" + R->basis_[j] + "·" + R->basis_[k] + ")");
            }
    for (int i = 0; i < n; ++i) {
        RElement b = RElement::basis(R->basis_[i]);
        if (!(R->multiply(RElement::one(), b) == R->canonical(b)) ||
            !(R->multiply(b, RElement::one()) == R->canonical(b)))
            throw std::invalid_argument("unit law fails at " + R->basis_[i]);
    }
    return R;
}

std::shared_ptr<const BasedAlgebra> BasedAlgebra::confluentPresented(
    AlphabetPtr gens, ReductionSystem internal, RElement p) {
    auto R = std::shared_ptr<BasedAlgebra>(new BasedAlgebra());
    R->finite_ = false;
    R->gens_ = gens;
    for (int i = 0; i < gens->size(); ++i)
        if (gens->label(i).size() != 1)
            throw std::invalid_argument(
                "presented algebras need single-character generator labels");
    internal.alpha = gens;
    R->internal_ = std::make_shared<ReductionSystem>(std::move(internal));

    auto term = checkTermination(*R->internal_, 4);
    if (!term.ok())
        throw std::invalid_argument("internal reduction system is not terminating");
    for (const auto& amb : enumerateAmbiguities(*R->internal_, 4))
        if (!resolveAmbiguity(amb, *R->internal_))
            throw std::invalid_argument(
                "internal reduction system has an unresolvable ambiguity at " +
                renderWord(*gens, amb.witness));
    R->p_ = std::move(p);
    return R;
}

RElement BasedAlgebra::canonical(RElement e) const {
    if (finite_ && unitExp_ && e.unit != 0) {
        Rational u = e.unit;
        e.unit = 0;
        for (const auto& [l, c] : *unitExp_) {
            auto [it, fresh] = e.coef.emplace(l, u * c);
            if (!fresh) {
                it->second += u * c;
                if (it->second == 0) e.coef.erase(it);
            }
        }
    }
    return e;
}

std::string BasedAlgebra::labelOfWord(const Word& w) const {
    std::string s;
    for (GenId g : w.letters) s += gens_->label(g);
    return s;
}

Word BasedAlgebra::wordOfLabel(const std::string& label) const {
    Word w;
    for (char ch : label) w.letters.push_back(gens_->id(std::string(1, ch)));
    return w;
}

const ReductionSystem& BasedAlgebra::internalSystem() const {
    if (finite_) throw std::logic_error("finite-table algebra has no internal system");
    return *internal_;
}

bool BasedAlgebra::isBasisWord(const Word& w) const {
    return !w.empty() && isIrreducible(w, *internal_);
}

std::vector<std::string> BasedAlgebra::basisWordsUpTo(int maxLen) const {
    std::vector<std::string> out;
    for (const auto& w : irreducibleWords(*internal_, maxLen))
        if (!w.empty()) out.push_back(labelOfWord(w));
    return out;
}

namespace {

RElement polyToRElement(const BasedAlgebra& R, const Poly& f) {
    RElement e;
    for (const auto& [w, c] : f.terms()) {
        if (w.empty())
            e.unit += c;
        else
            e += c * RElement::basis(R.labelOfWord(w));
    }
    return e;
}

Poly relementToInternalPoly(const BasedAlgebra& R, const RElement& e) {
    Poly f(R.generatorAlphabet());
    f.addTerm(Word::one(), e.unit);
    for (const auto& [l, c] : e.coef) f.addTerm(R.wordOfLabel(l), c);
    return f;
}

} // namespace

RElement BasedAlgebra::multiply(const RElement& a, const RElement& b) const {
    if (!finite_) {
        Poly fa = relementToInternalPoly(*this, a);
        Poly fb = relementToInternalPoly(*this, b);
        Poly prod = normalForm(freeMultiply(fa, fb), *internal_);
        return polyToRElement(*this, prod);
    }
    RElement out;
    out += a.unit * b;
    for (const auto& [la, ca] : a.coef) {
        if (b.unit != 0) out += (ca * b.unit) * RElement::basis(la);
        for (const auto& [lb, cb] : b.coef)
            out += (ca * cb) * table_[basisIndex_.at(la)][basisIndex_.at(lb)];
    }
    return canonical(std::move(out));
}

RElement BasedAlgebra::eval(const Poly& f,
                            const std::map<std::string, RElement>* extra) const {
    RElement out;
    const Alphabet& alpha = *f.alphabet();
    for (const auto& [w, c] : f.terms()) {
        RElement prod = RElement::one();
        for (GenId g : w.letters) {
            const std::string& label = alpha.label(g);
            RElement letter;
            if (extra && extra->count(label))
                letter = extra->at(label);
            else if (!finite_ || basisIndex_.count(label) != 0)
                letter = RElement::basis(label);
            else
                throw std::invalid_argument("unknown basis label: " + label);
            prod = multiply(prod, letter);
        }
        out += c * prod;
    }
    return canonical(std::move(out));
}

int BasedAlgebra::coordDim() const {
    if (!finite_) throw std::logic_error("coordinates need a finite table");
    return (int)basis_.size() + (unitExp_ ? 0 : 1);
}

QVec BasedAlgebra::coords(const RElement& raw) const {
    RElement e = canonical(raw);
    QVec v(coordDim(), Rational(0));
    for (const auto& [l, c] : e.coef) v[basisIndex_.at(l)] = c;
    if (!unitExp_)
        v[basis_.size()] = e.unit;
    else if (e.unit != 0)
        throw std::logic_error("canonical form retained a unit coordinate");
    return v;
}

RElement BasedAlgebra::fromCoords(const QVec& v) const {
    RElement e;
    for (int i = 0; i < (int)basis_.size(); ++i)
        if (v[i] != 0) e.coef.emplace(basis_[i], v[i]);
    if (!unitExp_) e.unit = v[basis_.size()];
    return e;
}

std::shared_ptr<const BasedAlgebra> BasedAlgebra::opposite() const {
    if (finite_) {
        std::map<std::pair<int, int>, RElement> t;
        int n = (int)basis_.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[{i, j}] = table_[j][i];
        return finiteTable(basis_, std::move(t), unitExp_, p_);
    }
    auto rev = [](const Word& w) {
        Word r = w;
        std::reverse(r.letters.begin(), r.letters.end());
        return r;
    };
    ReductionSystem sys;
    sys.alpha = gens_;
    for (const auto& r : internal_->rules) {
        Poly out(gens_);
        for (const auto& [w, c] : r.output.terms()) out.addTerm(rev(w), c);
        sys.rules.push_back({rev(r.input), std::move(out), r.origin + ".op"});
    }
    TermOrdering base = internal_->ordering;
    sys.ordering = {base.name + ".op", [base, rev](const Word& w) {
                        return base.measure(rev(w));
                    }};
    sys.stepLimit = internal_->stepLimit;
    return confluentPresented(gens_, std::move(sys), p_);
}

// ---------------------------------------------------------------------------
// Divisibility analysis

namespace {

/// Elements giving the coordinate axes: basis labels, then (if independent)
/// the unit.
std::vector<RElement> coordinateElements(const BasedAlgebra& R) {
    std::vector<RElement> out;
    for (const auto& l : R.basisLabels()) out.push_back(RElement::basis(l));
    if (!R.unitInSpan()) out.push_back(RElement::one());
    return out;
}

} // namespace

DivisibilityReport analyzeDivisibility(const BasedAlgebra& R) {
    if (!R.isFiniteTable())
        throw std::invalid_argument(
            "analyzeDivisibility needs a finite table; presented algebras "
            "supply partition data manually");
    int d = R.coordDim();
    const RElement& p = R.distinguishedP();

    QMat pRGens, RpGens;
    for (const auto& x : coordinateElements(R)) {
        pRGens.push_back(R.coords(R.multiply(p, x)));
        RpGens.push_back(R.coords(R.multiply(x, p)));
    }
    DivisibilityReport rep;
    rep.pR = linalg::Subspace(pRGens, d);
    rep.Rp = linalg::Subspace(RpGens, d);
    rep.cap = linalg::intersect(rep.pR, rep.Rp);
    rep.plus = linalg::sum(rep.pR, rep.Rp);

    QVec one = R.unitVector();
    bool inPR = rep.pR.contains(one);
    bool inRP = rep.Rp.contains(one);
    bool inPlus = rep.plus.contains(one);

    if (inPR && inRP) {
        rep.tag.kind = CaseKind::TwoSidedInvertible;
    } else if (inPR) {
        rep.tag.kind = CaseKind::RightInvertible;
    } else if (inRP) {
        rep.tag.kind = CaseKind::LeftInvertible;
    } else if (inPlus) {
        rep.tag.kind = CaseKind::Intermediate;
        // Solve p·s + t·p = 1, unknowns the coordinates of s and t.
        auto elems = coordinateElements(R);
        QMat sys(d, QVec(2 * d, Rational(0)));
        for (int k = 0; k < d; ++k) {
            QVec ps = R.coords(R.multiply(p, elems[k]));
            QVec tp = R.coords(R.multiply(elems[k], p));
            for (int r = 0; r < d; ++r) {
                sys[r][k] = ps[r];
                sys[r][d + k] = tp[r];
            }
        }
        auto sol = linalg::solve(sys, one);
        if (!sol) throw std::logic_error("ps + tp = 1 unsolvable despite 1 ∈ pR+Rp");
        QVec sCoords(sol->begin(), sol->begin() + d);
        QVec tCoords(sol->begin() + d, sol->end());
        rep.tag.s = R.fromCoords(sCoords);
        rep.tag.t = R.fromCoords(tCoords);
    } else {
        rep.tag.kind = CaseKind::NotReached;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Partition construction

namespace {

/// Reuses a basis label when the representative is exactly that basis
/// vector; otherwise mints g0, g1, ...
std::string labelForVector(const BasedAlgebra& R, const QVec& v, int& fresh) {
    int hit = -1, nonzero = 0;
    for (int i = 0; i < (int)v.size(); ++i) {
        if (v[i] != 0) {
            ++nonzero;
            hit = i;
        }
    }
    if (nonzero == 1 && hit < (int)R.basisLabels().size() && v[hit] == 1)
        return R.basisLabels()[hit];
    return "g" + std::to_string(fresh++);
}

struct PartBuilder {
    const BasedAlgebra& R;
    PartitionedBasis& pb;
    int fresh = 0;

    std::vector<std::string> addPart(const QMat& reps) {
        std::vector<std::string> labels;
        for (const auto& v : reps) {
            std::string l = labelForVector(R, v, fresh);
            pb.expansion[l] = R.fromCoords(v);
            labels.push_back(std::move(l));
        }
        return labels;
    }
};

QVec solveLeftFactor(const BasedAlgebra& R, const RElement& target) {
    // x·p = target
    int d = R.coordDim();
    auto elems = [&] {
        std::vector<RElement> out;
        for (const auto& l : R.basisLabels()) out.push_back(RElement::basis(l));
        if (!R.unitInSpan()) out.push_back(RElement::one());
        return out;
    }();
    QMat sys(d, QVec(d, Rational(0)));
    for (int k = 0; k < d; ++k) {
        QVec col = R.coords(R.multiply(elems[k], R.distinguishedP()));
        for (int r = 0; r < d; ++r) sys[r][k] = col[r];
    }
    auto sol = linalg::solve(sys, R.coords(target));
    if (!sol) throw std::logic_error("left factor unsolvable");
    return *sol;
}

QVec solveRightFactor(const BasedAlgebra& R, const RElement& target) {
    // p·y = target
    int d = R.coordDim();
    auto elems = [&] {
        std::vector<RElement> out;
        for (const auto& l : R.basisLabels()) out.push_back(RElement::basis(l));
        if (!R.unitInSpan()) out.push_back(RElement::one());
        return out;
    }();
    QMat sys(d, QVec(d, Rational(0)));
    for (int k = 0; k < d; ++k) {
        QVec col = R.coords(R.multiply(R.distinguishedP(), elems[k]));
        for (int r = 0; r < d; ++r) sys[r][k] = col[r];
    }
    auto sol = linalg::solve(sys, R.coords(target));
    if (!sol) throw std::logic_error("right factor unsolvable");
    return *sol;
}

} // namespace

PartitionedBasis buildPartitionedBasis(const BasedAlgebra& R, const CaseTag& tag) {
    if (!R.isFiniteTable())
        throw std::invalid_argument(
            "buildPartitionedBasis needs a finite table; presented algebras "
            "supply the partition manually (see io::loadAlgebra)");
    auto div = analyzeDivisibility(R);
    if (div.tag.kind != tag.kind)
        throw std::invalid_argument("case tag " + caseName(tag.kind) +
                                    " does not match the algebra (" +
                                    caseName(div.tag.kind) + ")");
    int d = R.coordDim();
    const RElement& p = R.distinguishedP();
    bool pZero = p.isZero();

    PartitionedBasis pb;
    pb.tag = tag;
    if (tag.kind == CaseKind::Intermediate && !tag.s) pb.tag = div.tag;
    PartBuilder builder{R, pb};

    linalg::Subspace empty({}, d);
    auto gensOf = [&](const linalg::Subspace& s) { return s.basis(); };

    switch (tag.kind) {
    case CaseKind::NotReached: {
        QMat capCandidates;
        if (!pZero) capCandidates.push_back(R.coords(p)); // p comes first
        for (const auto& v : gensOf(div.cap)) capCandidates.push_back(v);
        pb.bpp = builder.addPart(linalg::relativeComplement(capCandidates, empty));
        pb.bpm = builder.addPart(linalg::relativeComplement(gensOf(div.pR), div.cap));
        pb.bmp = builder.addPart(linalg::relativeComplement(gensOf(div.Rp), div.cap));
        // B_{--}: basis of R relative to pR+Rp+k.
        QMat plusK = gensOf(div.plus);
        plusK.push_back(R.unitVector());
        linalg::Subspace plusKS(plusK, d);
        QMat all;
        for (int i = 0; i < d; ++i) {
            QVec e(d, Rational(0));
            e[i] = 1;
            all.push_back(std::move(e));
        }
        pb.bmm = builder.addPart(linalg::relativeComplement(all, plusKS));
        break;
    }
    case CaseKind::RightInvertible: {
        // B_{++} basis of Rp = pRp containing p; B_{+-} basis of R rel Rp+k.
        QMat rpCandidates{R.coords(p)};
        for (const auto& v : gensOf(div.Rp)) rpCandidates.push_back(v);
        pb.bpp = builder.addPart(linalg::relativeComplement(rpCandidates, empty));
        QMat rpK = gensOf(div.Rp);
        rpK.push_back(R.unitVector());
        linalg::Subspace rpKS(rpK, d);
        QMat all;
        for (int i = 0; i < d; ++i) {
            QVec e(d, Rational(0));
            e[i] = 1;
            all.push_back(std::move(e));
        }
        pb.bpm = builder.addPart(linalg::relativeComplement(all, rpKS));
        pb.rightInverse = R.fromCoords(solveRightFactor(R, RElement::one()));
        break;
    }
    case CaseKind::LeftInvertible:
        throw std::invalid_argument(
            "LeftInvertible is handled through the opposite algebra "
            "(BasedAlgebra::opposite) and Case B");
    case CaseKind::TwoSidedInvertible:
        throw std::invalid_argument(
            "p is invertible: adjoining an inner inverse leaves R unchanged");
    case CaseKind::Intermediate: {
        const RElement& s = *pb.tag.s;
        const RElement& t = *pb.tag.t;
        RElement ps = R.multiply(p, s);
        RElement tp = R.multiply(t, p);

        QMat capCandidates{R.coords(p)};
        for (const auto& v : gensOf(div.cap)) capCandidates.push_back(v);
        pb.bpp = builder.addPart(linalg::relativeComplement(capCandidates, empty));

        QMat pmCandidates{R.coords(ps)}; // ps forced into B_{+-}
        for (const auto& v : gensOf(div.pR)) pmCandidates.push_back(v);
        auto pmReps = linalg::relativeComplement(pmCandidates, div.cap);
        pb.bpm = builder.addPart(pmReps);
        if (pb.bpm.empty() || !(pb.expansion.at(pb.bpm[0]) == ps))
            throw std::invalid_argument("cannot force ps into B_{+-}: inconsistent input");
        pb.designatedPS = pb.bpm[0];

        QMat mpCandidates{R.coords(tp)};
        for (const auto& v : gensOf(div.Rp)) mpCandidates.push_back(v);
        auto mpReps = linalg::relativeComplement(mpCandidates, div.cap);
        pb.bmp = builder.addPart(mpReps);
        if (pb.bmp.empty() || !(pb.expansion.at(pb.bmp[0]) == tp))
            throw std::invalid_argument("cannot force tp into B_{-+}: inconsistent input");
        pb.designatedTP = pb.bmp[0];

        QMat all;
        for (int i = 0; i < d; ++i) {
            QVec e(d, Rational(0));
            e[i] = 1;
            all.push_back(std::move(e));
        }
        pb.bmm = builder.addPart(linalg::relativeComplement(all, div.plus));
        break;
    }
    }

    if (!pZero && tag.kind != CaseKind::TwoSidedInvertible) {
        if (pb.bpp.empty() || !(pb.expansion.at(pb.bpp[0]) == R.distinguishedP()))
            throw std::invalid_argument("cannot force p into B_{++}");
    }

    // Witnesses by linear algebra; any solution is acceptable, so the
    // pivot solution (free variables zero) keeps results reproducible.
    for (const auto& l : pb.allLabels()) {
        if (pb.inLeftDivisiblePart(l))
            pb.leftFactor[l] = R.fromCoords(solveLeftFactor(R, pb.expansion.at(l)));
        if (pb.inRightDivisiblePart(l))
            pb.rightFactor[l] = R.fromCoords(solveRightFactor(R, pb.expansion.at(l)));
    }
    return pb;
}

std::vector<std::string> PartitionedBasis::allLabels() const {
    std::vector<std::string> out;
    for (const auto* part : {&bpp, &bpm, &bmp, &bmm})
        out.insert(out.end(), part->begin(), part->end());
    return out;
}

bool PartitionedBasis::inLeftDivisiblePart(const std::string& label) const {
    return std::find(bpp.begin(), bpp.end(), label) != bpp.end() ||
           std::find(bmp.begin(), bmp.end(), label) != bmp.end();
}

bool PartitionedBasis::inRightDivisiblePart(const std::string& label) const {
    return std::find(bpp.begin(), bpp.end(), label) != bpp.end() ||
           std::find(bpm.begin(), bpm.end(), label) != bpm.end();
}

RElement PartitionedBasis::express(const BasedAlgebra& R, const RElement& e) const {
    if (!R.isFiniteTable()) {
        // Presented algebras: labels are the irreducible words themselves.
        for (const auto& [l, c] : e.coef)
            if (!expansion.count(l))
                throw std::out_of_range("element leaves the supplied basis slice at " + l);
        return e;
    }
    std::vector<std::string> cols;
    for (const auto& l : allLabels()) {
        if (tag.kind == CaseKind::Intermediate && designatedPS && l == *designatedPS)
            continue; // ps is excluded: ps = 1 − tp
        cols.push_back(l);
    }
    int d = R.coordDim();
    QMat sys(d, QVec(cols.size() + 1, Rational(0)));
    for (std::size_t k = 0; k < cols.size(); ++k) {
        QVec col = R.coords(expansion.at(cols[k]));
        for (int r = 0; r < d; ++r) sys[r][k] = col[r];
    }
    QVec unitCol = R.unitVector();
    for (int r = 0; r < d; ++r) sys[r][cols.size()] = unitCol[r];
    auto sol = linalg::solve(sys, R.coords(e));
    if (!sol) throw std::logic_error("partition does not span the element");
    RElement out;
    for (std::size_t k = 0; k < cols.size(); ++k)
        if ((*sol)[k] != 0) out.coef.emplace(cols[k], (*sol)[k]);
    out.unit = (*sol)[cols.size()];
    return out;
}

PartitionCheck validatePartition(const BasedAlgebra& R, const PartitionedBasis& pb) {
    PartitionCheck check;
    auto fail = [&](const std::string& msg) {
        check.ok = false;
        check.failures.push_back(msg);
    };
    const RElement& p = R.distinguishedP();

    for (const auto& [l, w] : pb.leftFactor) {
        if (!(R.multiply(w, p) == pb.expansion.at(l)))
            fail("leftFactor(" + l + ")·p != " + l);
    }
    for (const auto& [l, w] : pb.rightFactor) {
        if (!(R.multiply(p, w) == pb.expansion.at(l)))
            fail("p·rightFactor(" + l + ") != " + l);
    }
    if (pb.rightInverse && !(R.multiply(p, *pb.rightInverse) == RElement::one()))
        fail("p·q0 != 1");
    if (pb.tag.kind == CaseKind::Intermediate) {
        if (!pb.tag.s || !pb.tag.t) {
            fail("Intermediate tag without s, t witnesses");
        } else {
            RElement sum = R.multiply(p, *pb.tag.s) + R.multiply(*pb.tag.t, p);
            if (!(sum == RElement::one())) fail("ps + tp != 1");
            if (!pb.designatedPS || !pb.designatedTP)
                fail("Intermediate partition must designate ps and tp");
            else {
                if (!(pb.expansion.at(*pb.designatedPS) == R.multiply(p, *pb.tag.s)))
                    fail("designated ps label does not expand to p·s");
                if (!(pb.expansion.at(*pb.designatedTP) == R.multiply(*pb.tag.t, p)))
                    fail("designated tp label does not expand to t·p");
            }
        }
    }

    if (R.isFiniteTable()) {
        int d = R.coordDim();
        QMat vecs;
        for (const auto& l : pb.allLabels()) vecs.push_back(R.coords(pb.expansion.at(l)));
        std::size_t nB = vecs.size();
        int rankB = linalg::rank(vecs);
        vecs.push_back(R.unitVector());
        int rankB1 = linalg::rank(vecs);
        if (pb.tag.kind == CaseKind::Intermediate) {
            // B is a basis of R; B ∪ {1} carries exactly one relation.
            if (rankB != (int)nB || rankB != d || rankB1 != d)
                fail("Intermediate partition is not a basis with the single relation ps+tp=1");
        } else {
            if (rankB != (int)nB || rankB1 != (int)nB + 1 || rankB1 != d)
                fail("partition ∪ {1} is not a basis of R");
        }
    }
    return check;
}

} // namespace innerinv
