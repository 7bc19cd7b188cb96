#include "innerinv/poly.hpp"

#include <algorithm>
#include <sstream>

namespace innerinv {

std::string renderWord(const Alphabet& alpha, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "·";
        s += alpha.label(w[i]);
    }
    return s;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!alpha_) alpha_ = o.alpha_;
    for (const auto& [w, c] : o.terms_) addTerm(w, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!alpha_) alpha_ = o.alpha_;
    for (const auto& [w, c] : o.terms_) addTerm(w, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) { terms_.clear(); return *this; }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r(alpha_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

static void requireSameAlphabet(const Poly& f, const Poly& g) {
    const auto& a = f.alphabet();
    const auto& b = g.alphabet();
    if (a && b && a != b)
        throw std::invalid_argument("free-algebra operands over different alphabets");
}

Poly freeMultiply(const Poly& f, const Poly& g) {
    requireSameAlphabet(f, g);
    Poly r(f.alphabet() ? f.alphabet() : g.alphabet());
    for (const auto& [u, cu] : f.terms())
        for (const auto& [v, cv] : g.terms())
            r.addTerm(concat(u, v), cu * cv);
    return r;
}

Poly substitute(const Poly& f, const AlphabetPtr& target,
                const std::map<GenId, Poly>& assignment) {
    Poly r(target);
    for (const auto& [w, c] : f.terms()) {
        Poly prod = Poly::monomial(target, Word::one(), c);
        for (GenId g : w.letters) {
            auto it = assignment.find(g);
            if (it == assignment.end())
                throw std::invalid_argument(
                    "substitute: unassigned letter '" +
                    (f.alphabet() ? f.alphabet()->label(g) : std::to_string(g)) + "'");
            prod = freeMultiply(prod, it->second);
        }
        r += prod;
    }
    return r;
}

std::string renderPoly(const Poly& f) {
    if (f.isZero()) return "0";
    const Alphabet& alpha = *f.alphabet();

    // Display order: longest words first, then label-lexicographic.
    std::vector<std::pair<std::string, const Rational*>> items;
    for (const auto& [w, c] : f.terms())
        items.emplace_back(renderWord(alpha, w), &c);
    std::vector<std::size_t> lens;
    for (const auto& [w, c] : f.terms()) lens.push_back(w.size());
    std::vector<std::size_t> idx(items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (lens[a] != lens[b]) return lens[a] > lens[b];
        return items[a].first < items[b].first;
    });

    std::ostringstream out;
    bool first = true;
    for (std::size_t i : idx) {
        const Rational& c = *items[i].second;
        const std::string& ws = items[i].first;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1 || ws == "1") {
            out << renderRational(mag);
            if (ws != "1") out << "·";
        }
        if (ws != "1") out << ws;
    }
    return out.str();
}

} // namespace innerinv
