#pragma once

#include "innerinv/alphabet.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace innerinv {

/// Monomial of the free algebra: a finite sequence of generators.
/// The empty word denotes 1.
struct Word {
    std::vector<GenId> letters;

    Word() = default;
    explicit Word(std::vector<GenId> ls) : letters(std::move(ls)) {}

    static Word one() { return Word{}; }
    static Word single(GenId g) { return Word{{g}}; }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }
    GenId operator[](std::size_t i) const { return letters[i]; }

    auto operator<=>(const Word&) const = default;

    Word subword(std::size_t pos, std::size_t len) const {
        return Word{std::vector<GenId>(letters.begin() + pos, letters.begin() + pos + len)};
    }
};

/// Letters of u followed by letters of v.
inline Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

/// First position where `sub` occurs as a subword of `w`, or -1.
inline long findSubword(const Word& w, const Word& sub) {
    if (sub.size() > w.size()) return -1;
    for (std::size_t i = 0; i + sub.size() <= w.size(); ++i) {
        bool hit = true;
        for (std::size_t j = 0; j < sub.size(); ++j)
            if (w[i + j] != sub[j]) { hit = false; break; }
        if (hit) return (long)i;
    }
    return -1;
}

/// Shortlex-style order used only for deterministic storage: length first,
/// then letter ids. Carries no semantic weight.
struct WordStoreOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.letters < b.letters;
    }
};

/// Column order for the ideal-slice oracle: longer words first.
struct WordLongFirstOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.letters < b.letters;
    }
};

std::string renderWord(const Alphabet& alpha, const Word& w);

} // namespace innerinv
