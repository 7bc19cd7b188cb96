#include "innerinv/rewrite.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace innerinv {

TermOrdering lengthOrdering() {
    return {"length", [](const Word& w) {
                return std::vector<long long>{(long long)w.size()};
            }};
}

std::size_t ReductionSystem::maxExplicitInputLen() const {
    std::size_t m = 0;
    for (const auto& r : rules) m = std::max(m, r.input.size());
    return m;
}

std::optional<Rule> ReductionSystem::matchAt(const Word& w, std::size_t pos,
                                             std::size_t len) const {
    Word sub = w.subword(pos, len);
    for (const auto& r : rules)
        if (r.input == sub) return r;
    for (const auto& s : schemas)
        if (auto r = s.match(sub)) return r;
    return std::nullopt;
}

namespace {

struct Redex {
    std::size_t pos;
    Rule rule;
};

std::vector<Redex> allRedexes(const Word& w, const ReductionSystem& sys) {
    std::vector<Redex> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 1; pos + len <= w.size(); ++len)
            if (auto r = sys.matchAt(w, pos, len)) out.push_back({pos, *r});
    return out;
}

std::optional<Redex> leftmostLongest(const Word& w, const ReductionSystem& sys) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        std::optional<Redex> best;
        for (std::size_t len = w.size() - pos; len >= 1; --len) {
            if (auto r = sys.matchAt(w, pos, len)) { best = Redex{pos, *r}; break; }
        }
        if (best) return best;
    }
    return std::nullopt;
}

} // namespace

bool isIrreducible(const Word& w, const ReductionSystem& sys) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (std::size_t len = 1; pos + len <= w.size(); ++len)
            if (sys.matchAt(w, pos, len)) return false;
    return true;
}

Poly normalForm(const Poly& f, const ReductionSystem& sys, NFStrategy strategy) {
    std::mt19937_64 rng(strategy.seed);
    Poly result(sys.alpha);
    long steps = 0;

    // Worklist of scaled words; rewriting is linear so each word is
    // normalized independently.
    std::vector<std::pair<Word, Rational>> work;
    for (const auto& [w, c] : f.terms()) work.emplace_back(w, c);

    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;

        std::optional<Redex> red;
        if (strategy.kind == NFStrategy::LeftmostLongest) {
            red = leftmostLongest(w, sys);
        } else {
            auto rs = allRedexes(w, sys);
            if (!rs.empty()) {
                std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
                red = rs[pick(rng)];
            }
        }
        if (!red) {
            result.addTerm(w, c);
            continue;
        }
        if (++steps > sys.stepLimit)
            throw StepLimitExceeded("normalForm exceeded " +
                                    std::to_string(sys.stepLimit) + " steps");

        const Word& in = red->rule.input;
        Word prefix = w.subword(0, red->pos);
        Word suffix = w.subword(red->pos + in.size(), w.size() - red->pos - in.size());
        for (const auto& [ow, oc] : red->rule.output.terms())
            work.emplace_back(concat(concat(prefix, ow), suffix), c * oc);
    }
    return result;
}

std::vector<Word> irreducibleWords(const ReductionSystem& sys, int maxLen) {
    std::vector<Word> out;
    std::vector<Word> frontier{Word::one()};
    out.push_back(Word::one());
    int nGen = sys.alpha->size();
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (GenId g = 0; g < nGen; ++g) {
                Word cand = concat(w, Word::single(g));
                // w is irreducible, so any redex of cand ends at the last letter.
                bool reducible = false;
                for (std::size_t len2 = 1; len2 <= cand.size() && !reducible; ++len2)
                    if (sys.matchAt(cand, cand.size() - len2, len2)) reducible = true;
                if (!reducible) next.push_back(std::move(cand));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

namespace {

std::vector<Rule> materialize(const ReductionSystem& sys, int schemaBound) {
    std::vector<Rule> all = sys.rules;
    for (const auto& s : sys.schemas) {
        auto inst = s.enumerate(schemaBound);
        all.insert(all.end(), inst.begin(), inst.end());
    }
    return all;
}

} // namespace

TerminationReport checkTermination(const ReductionSystem& sys, int schemaBound) {
    TerminationReport rep;
    for (const auto& r : materialize(sys, schemaBound)) {
        ++rep.rulesChecked;
        if (r.input.empty()) {
            rep.violations.push_back({r, Word::one()});
            continue;
        }
        for (const auto& [w, c] : r.output.terms())
            if (!sys.ordering.less(w, r.input)) rep.violations.push_back({r, w});
    }
    return rep;
}

namespace {

Poly applyAt(const Word& w, std::size_t pos, const Rule& r, const AlphabetPtr& alpha) {
    Poly out(alpha);
    Word prefix = w.subword(0, pos);
    Word suffix = w.subword(pos + r.input.size(), w.size() - pos - r.input.size());
    for (const auto& [ow, oc] : r.output.terms())
        out.addTerm(concat(concat(prefix, ow), suffix), oc);
    return out;
}

} // namespace

std::vector<Ambiguity> enumerateAmbiguities(const ReductionSystem& sys,
                                            int schemaBound) {
    auto all = materialize(sys, schemaBound);
    std::vector<Ambiguity> out;
    for (const auto& r1 : all) {
        for (const auto& r2 : all) {
            const Word& a = r1.input;
            const Word& b = r2.input;
            // Overlap: proper nonempty suffix of a equals prefix of b.
            for (std::size_t o = 1; o < std::min(a.size(), b.size()); ++o) {
                bool eq = true;
                for (std::size_t i = 0; i < o; ++i)
                    if (a[a.size() - o + i] != b[i]) { eq = false; break; }
                if (!eq) continue;
                Word wit = a;
                for (std::size_t i = o; i < b.size(); ++i)
                    wit.letters.push_back(b[i]);
                Ambiguity amb;
                amb.kind = Ambiguity::Overlap;
                amb.leftRule = r1;
                amb.rightRule = r2;
                amb.witness = wit;
                amb.leftReduct = applyAt(wit, 0, r1, sys.alpha);
                amb.rightReduct = applyAt(wit, a.size() - o, r2, sys.alpha);
                out.push_back(std::move(amb));
            }
            // Inclusion: b a proper subword of a.
            if (b.size() < a.size()) {
                for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                    bool eq = true;
                    for (std::size_t i = 0; i < b.size(); ++i)
                        if (a[pos + i] != b[i]) { eq = false; break; }
                    if (!eq) continue;
                    Ambiguity amb;
                    amb.kind = Ambiguity::Inclusion;
                    amb.leftRule = r1;
                    amb.rightRule = r2;
                    amb.witness = a;
                    amb.leftReduct = applyAt(a, 0, r1, sys.alpha);
                    amb.rightReduct = applyAt(a, pos, r2, sys.alpha);
                    out.push_back(std::move(amb));
                }
            }
        }
    }
    return out;
}

bool resolveAmbiguity(const Ambiguity& a, const ReductionSystem& sys) {
    return normalForm(a.leftReduct, sys) == normalForm(a.rightReduct, sys);
}

} // namespace innerinv
