#pragma once

#include "innerinv/rational.hpp"
#include "innerinv/word.hpp"

#include <map>
#include <string>

namespace innerinv {

/// Element of the free algebra k<G>: a finitely supported Word -> Rational
/// mapping. Zero coefficients are never stored; equality is term-by-term.
/// Immutable by convention once handed out of a constructor function.
class Poly {
public:
    using Terms = std::map<Word, Rational, WordStoreOrder>;

    Poly() = default;
    explicit Poly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

    static Poly zero(AlphabetPtr alpha) { return Poly(std::move(alpha)); }
    static Poly one(AlphabetPtr alpha) { return monomial(std::move(alpha), Word::one(), 1); }
    static Poly monomial(AlphabetPtr alpha, Word w, Rational c) {
        Poly p(std::move(alpha));
        if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
        return p;
    }
    static Poly letter(const AlphabetPtr& alpha, const std::string& label) {
        return monomial(alpha, Word::single(alpha->id(label)), 1);
    }

    const Terms& terms() const { return terms_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t termCount() const { return terms_.size(); }

    Rational coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void addTerm(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const;

private:
    AlphabetPtr alpha_;
    Terms terms_;
};

/// Bilinear extension of word concatenation. Throws on alphabet mismatch.
Poly freeMultiply(const Poly& f, const Poly& g);

/// Multiplicative-linear extension of a generator assignment. The assignment
/// must cover every letter occurring in f; images live in `target`.
Poly substitute(const Poly& f, const AlphabetPtr& target,
                const std::map<GenId, Poly>& assignment);

/// Rationals as "a/b"; words "·"-joined; empty word "1"; terms listed
/// longest first, ties by label.
std::string renderPoly(const Poly& f);

} // namespace innerinv
