#pragma once

#include "innerinv/poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace innerinv {

/// One reduction W ↦ f. The input is a nonempty word; every word of the
/// output must lie strictly below the input in the system's ordering.
struct Rule {
    Word input;
    Poly output;
    std::string origin; // which rule family produced it, for reports
};

/// A parametric family of rules, e.g. (xp)·q^n·(py) for all n ≥ 1.
/// `match` recognizes a whole word as an instance and generates the rule on
/// demand; `enumerate` materializes instances with index ≤ bound for
/// ambiguity analysis and termination checks.
struct RuleSchema {
    std::string name;
    std::function<std::optional<Rule>(const Word&)> match;
    std::function<std::vector<Rule>(int bound)> enumerate;
};

/// Word measure compared lexicographically; distinct words with equal
/// measures are incomparable. Must respect concatenation and have
/// descending chain condition (verified by tests for the shipped orderings).
struct TermOrdering {
    std::string name;
    std::function<std::vector<long long>(const Word&)> measure;
    bool less(const Word& a, const Word& b) const {
        return measure(a) < measure(b);
    }
};

TermOrdering lengthOrdering();

struct ReductionSystem {
    AlphabetPtr alpha;
    std::vector<Rule> rules;
    std::vector<RuleSchema> schemas;
    TermOrdering ordering = lengthOrdering();
    long stepLimit = 1'000'000;

    std::size_t maxExplicitInputLen() const;
    /// Longest rule (explicit or schema) matching a prefix of w starting at
    /// pos; schemas are probed on every prefix length.
    std::optional<Rule> matchAt(const Word& w, std::size_t pos,
                                std::size_t len) const;
};

struct NFStrategy {
    enum Kind { LeftmostLongest, Random } kind = LeftmostLongest;
    std::uint64_t seed = 0;
    static NFStrategy leftmost() { return {}; }
    static NFStrategy random(std::uint64_t seed) { return {Random, seed}; }
};

class StepLimitExceeded : public std::runtime_error {
public:
    explicit StepLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Applies reductions until no rule or schema input occurs as a subword.
/// LeftmostLongest (reduce at the leftmost reducible position with the
/// longest matching input) is deterministic; Random draws the redex from a
/// seeded generator. Computation is per word; the result extends linearly.
Poly normalForm(const Poly& f, const ReductionSystem& sys,
                NFStrategy strategy = NFStrategy::leftmost());

bool isIrreducible(const Word& w, const ReductionSystem& sys);

/// All irreducible words of length ≤ maxLen, in shortlex order.
std::vector<Word> irreducibleWords(const ReductionSystem& sys, int maxLen);

struct TerminationReport {
    struct Violation {
        Rule rule;
        Word offendingOutputWord;
    };
    int rulesChecked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Verifies that every explicit rule and every schema instance with index
/// ≤ schemaBound has all output words strictly below its input.
TerminationReport checkTermination(const ReductionSystem& sys, int schemaBound);

struct Ambiguity {
    enum Kind { Overlap, Inclusion } kind = Overlap;
    Rule leftRule, rightRule;
    Word witness;
    Poly leftReduct, rightReduct; // the two one-step reducts of the witness
};

/// All overlap and inclusion ambiguities among explicit rules and schema
/// instances with index ≤ schemaBound. Overlap witnesses are exactly
/// (prefix)·(overlap)·(suffix) with nonempty proper overlap; inclusion
/// witnesses are the longer input itself.
std::vector<Ambiguity> enumerateAmbiguities(const ReductionSystem& sys,
                                            int schemaBound);

/// True iff the two one-step reducts have equal normal forms.
bool resolveAmbiguity(const Ambiguity& a, const ReductionSystem& sys);

} // namespace innerinv
