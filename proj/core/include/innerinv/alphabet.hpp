#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace innerinv {

using GenId = int;

enum class GenKind {
    AdjoinedQ,    // the universal inner inverse adjoined to R
    BasisElement, // letter naming a basis element of a based algebra
    FreeSymbol,   // plain free-algebra indeterminate
    ModuleLabel,  // module basis element (leftmost position only)
};

struct Gen {
    std::string label;
    GenKind kind = GenKind::FreeSymbol;
};

/// Immutable generator alphabet; words refer to letters by index.
/// Labels are unique within one alphabet.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Gen> gens) : gens_(std::move(gens)) {
        for (GenId i = 0; i < (GenId)gens_.size(); ++i) {
            if (!index_.emplace(gens_[i].label, i).second)
                throw std::invalid_argument("duplicate generator label: " + gens_[i].label);
        }
    }

    static std::shared_ptr<const Alphabet> freeSymbols(const std::vector<std::string>& labels) {
        std::vector<Gen> gens;
        gens.reserve(labels.size());
        for (const auto& l : labels) gens.push_back({l, GenKind::FreeSymbol});
        return std::make_shared<const Alphabet>(std::move(gens));
    }

    int size() const { return (int)gens_.size(); }
    const Gen& gen(GenId i) const { return gens_.at(i); }
    const std::string& label(GenId i) const { return gens_.at(i).label; }

    GenId id(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end())
            throw std::invalid_argument("unknown generator label: " + label);
        return it->second;
    }
    bool has(const std::string& label) const { return index_.count(label) != 0; }

private:
    std::vector<Gen> gens_;
    std::unordered_map<std::string, GenId> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

} // namespace innerinv
