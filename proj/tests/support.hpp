// Shared helpers for the unit suites.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <condorcet/condorcet.hpp>

namespace condorcet::fixtures {

inline const RuleSet kPeakPit23{NeverCondition{2, 3}, NeverCondition{2, 1}};
inline const RuleSet kPeakPit13{NeverCondition{1, 3}, NeverCondition{3, 1}};
inline const RuleSet kMixed{NeverCondition{1, 3}, NeverCondition{2, 1}};

inline std::vector<RuleSet> studied_rule_sets() { return {kPeakPit23, kPeakPit13, kMixed}; }

/// Every complete assignment over R, in ascending code-string order.
inline std::vector<ConditionAssignment> all_complete(int n, const RuleSet& rules)
{
    const auto allowed = rules.codes();
    std::vector<ConditionAssignment> out;
    std::vector<std::size_t> digit(choose3(n), 0);
    while (true) {
        std::vector<Code> codes(digit.size());
        for (std::size_t s = 0; s < digit.size(); ++s) codes[s] = allowed[digit[s]];
        out.emplace_back(n, std::move(codes));
        std::size_t s = digit.size();
        while (s > 0 && ++digit[s - 1] == allowed.size()) digit[--s] = 0;
        if (s == 0) break;
    }
    return out;
}

/// Slot-by-slot reading of the partial maximality test: every relabeling of
/// [m] is tried, rejected by the three rules, and compared in full.
inline bool reference_partially_lex_max(const ConditionAssignment& assignment, const RuleSet& rules)
{
    const int n = assignment.alternatives();
    const int m = support_max(assignment);
    if (m == 0) return true;
    const auto allowed = rules.codes();
    std::vector<Alternative> images(m);
    std::iota(images.begin(), images.end(), Alternative{1});
    do {
        Permutation g(images);
        ConditionAssignment image(n);
        bool rejected = false;
        for (std::size_t s = 0; s < assignment.slots() && !rejected; ++s) {
            const Triple t = triple_at(s, n);
            const auto target = triple_index(apply_to_triple(g, t), n);
            if (assignment[s] != kUnassigned) {
                auto c = induced_condition(t, NeverCondition::from_code(assignment[s]), g);
                if (!c.is_valid() || !rules.contains(c.code())) rejected = true;
                else image.set(target, c.code());
                continue;
            }
            if (assignment[target] != kUnassigned) rejected = true;
            for (Code r : allowed) {
                auto c = induced_condition(t, NeverCondition::from_code(r), g);
                if (!c.is_valid() || !rules.contains(c.code())) rejected = true;
            }
        }
        if (!rejected && image > assignment) return false;
    } while (std::next_permutation(images.begin(), images.end()));
    return true;
}

/// A random co-lex prefix over R of the given length.
inline ConditionAssignment random_prefix(int n, const RuleSet& rules, std::size_t length, std::mt19937& rng)
{
    const auto allowed = rules.codes();
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    ConditionAssignment a(n);
    for (std::size_t s = 0; s < length; ++s) a.set(s, allowed[pick(rng)]);
    return a;
}

inline ConditionAssignment random_complete(int n, const RuleSet& rules, std::mt19937& rng)
{
    return random_prefix(n, rules, choose3(n), rng);
}

inline std::vector<std::string> code_strings(const std::vector<ConditionAssignment>& v)
{
    std::vector<std::string> out;
    for (const auto& a : v) out.push_back(to_code_string(a));
    return out;
}

} // namespace condorcet::fixtures
