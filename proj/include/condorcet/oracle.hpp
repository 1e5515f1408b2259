// oracle.hpp -- brute-force reference for the orderly generator.
//
// Shares only the basic types with the engine. The relabeling action is
// recoded here from its definition; nothing from iso.hpp or search.hpp is
// used to decide classes or representatives.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "domain.hpp"
#include "lexcode.hpp"

namespace condorcet::oracle {

/// Refusal to enumerate beyond the size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kMaxAssignments = 1e9;

struct OrbitReport {
    ConditionAssignment canonical;
    std::uint64_t orbit_size = 0;           ///< R-assignments isomorphic to canonical
    std::uint64_t stabilizer_size = 0;      ///< relabelings fixing canonical
    std::uint64_t respecting_relabelings = 0; ///< relabelings keeping canonical inside R
};

struct ClassReport {
    std::vector<OrbitReport> orbits; ///< ascending by canonical code string
    std::size_t class_count() const { return orbits.size(); }
    std::vector<ConditionAssignment> canonicals() const
    {
        std::vector<ConditionAssignment> out;
        for (const auto& o : orbits) out.push_back(o.canonical);
        return out;
    }
};

/// The relabeled code string, with 7 marking a 1N1/2N2/3N3 image.
/// perm[x] is the image of alternative x (perm[0] unused).
inline std::vector<Code> relabel(const std::vector<Code>& codes, int n, const std::vector<int>& perm)
{
    // Position/rank pairs for codes 1..6, written out from the code table.
    static constexpr int kPos[7] = {0, 1, 1, 2, 2, 3, 3};
    static constexpr int kRank[7] = {0, 2, 3, 1, 3, 1, 2};
    std::vector<Code> out(codes.size(), kUnassigned);
    std::size_t s = 0;
    for (int c = 3; c <= n; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a, ++s) {
                const Code code = codes[s];
                if (code == kUnassigned) continue;
                int img[3] = {perm[a], perm[b], perm[c]};
                int sorted[3] = {img[0], img[1], img[2]};
                std::sort(sorted, sorted + 3);
                const int moved = img[kPos[code] - 1];
                const int new_pos = static_cast<int>(std::find(sorted, sorted + 3, moved) - sorted) + 1;
                const int rank = kRank[code];
                Code induced = kInvalidCode;
                for (Code k = 1; k <= 6; ++k)
                    if (kPos[k] == new_pos && kRank[k] == rank) induced = k;
                // co-lex slot of the sorted image
                std::size_t slot = 0;
                for (int x = 3; x < sorted[2]; ++x) slot += static_cast<std::size_t>(x - 1) * (x - 2) / 2;
                slot += static_cast<std::size_t>(sorted[1] - 1) * (sorted[1] - 2) / 2 + (sorted[0] - 1);
                out[slot] = induced;
            }
    return out;
}

inline bool within(const std::vector<Code>& codes, const RuleSet& rules)
{
    return std::all_of(codes.begin(), codes.end(), [&](Code c) { return rules.contains(c); });
}

/// Enumerates every complete assignment over R, partitions them into orbits
/// under all n! relabelings, and reports the lexicographic maximum of each.
inline ClassReport brute_force_classes(int n, const RuleSet& rules)
{
    require_alternative_count(n);
    const auto slots = choose3(n);
    const auto allowed = rules.codes();
    const double count = std::pow(static_cast<double>(allowed.size()), static_cast<double>(slots));
    if (count > kMaxAssignments)
        throw GuardError("oracle refuses " + std::to_string(allowed.size()) + "^" + std::to_string(slots) +
                         " assignments; the bound is 1e9");

    const std::uint64_t total = static_cast<std::uint64_t>(std::llround(count));
    const std::uint64_t radix = allowed.size();
    auto digit_of = [&](Code c) {
        return static_cast<std::uint64_t>(std::find(allowed.begin(), allowed.end(), c) - allowed.begin());
    };
    auto rank_of = [&](const std::vector<Code>& codes) {
        std::uint64_t r = 0;
        for (Code c : codes) r = r * radix + digit_of(c);
        return r;
    };

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(n + 1);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin() + 1, p.end()));
    }

    std::vector<bool> seen(total, false);
    std::vector<Code> codes(slots, allowed.front());
    ClassReport report;
    for (std::uint64_t index = 0; index < total; ++index) {
        // mixed-radix decode, most significant slot first
        std::uint64_t r = index;
        for (std::size_t s = slots; s-- > 0;) {
            codes[s] = allowed[r % radix];
            r /= radix;
        }
        if (seen[index]) continue;

        std::vector<std::vector<Code>> orbit;
        OrbitReport entry;
        for (const auto& p : perms) {
            auto image = relabel(codes, n, p);
            if (!within(image, rules)) continue;
            ++entry.respecting_relabelings;
            if (image == codes) ++entry.stabilizer_size;
            const auto image_rank = rank_of(image);
            if (!seen[image_rank]) {
                seen[image_rank] = true;
                orbit.push_back(std::move(image));
            }
        }
        entry.orbit_size = orbit.size();
        entry.canonical = ConditionAssignment(n, *std::max_element(orbit.begin(), orbit.end()));
        report.orbits.push_back(std::move(entry));
    }
    std::sort(report.orbits.begin(), report.orbits.end(),
              [](const OrbitReport& x, const OrbitReport& y) { return x.canonical < y.canonical; });
    return report;
}

/// Every order of [n] that satisfies all assigned conditions, by filtering
/// the n! orders.
inline Domain expand_by_filter(const ConditionAssignment& assignment)
{
    const int n = assignment.alternatives();
    require(n <= 9, "expand_by_filter: n! filter limited to n <= 9");
    auto triples = colex_triples(n);
    std::vector<Alternative> seq(n);
    std::iota(seq.begin(), seq.end(), Alternative{1});
    std::vector<LinearOrder> kept;
    do {
        LinearOrder order(seq);
        bool ok = true;
        for (std::size_t s = 0; s < triples.size() && ok; ++s)
            if (assignment[s] != kUnassigned)
                ok = satisfies(order, triples[s], NeverCondition::from_code(assignment[s]));
        if (ok) kept.push_back(std::move(order));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return Domain(n, std::move(kept));
}

struct Verdict {
    bool equal = false;
    std::size_t oracle_count = 0;
    std::size_t generator_count = 0;
    std::vector<ConditionAssignment> only_in_oracle;
    std::vector<ConditionAssignment> only_in_generator;
};

/// Compares the generator's leaves with the oracle's representatives.
/// With copious_only the oracle keeps classes whose filtered domain is copious.
template <typename Generator>
Verdict cross_check(int n, const RuleSet& rules, bool copious_only, Generator&& generate_leaves)
{
    auto expected = brute_force_classes(n, rules).canonicals();
    if (copious_only)
        std::erase_if(expected, [](const ConditionAssignment& a) { return !is_copious(expand_by_filter(a)); });
    std::vector<ConditionAssignment> produced = generate_leaves();
    std::sort(expected.begin(), expected.end());
    std::sort(produced.begin(), produced.end());

    Verdict v;
    v.oracle_count = expected.size();
    v.generator_count = produced.size();
    std::set_difference(expected.begin(), expected.end(), produced.begin(), produced.end(),
                        std::back_inserter(v.only_in_oracle));
    std::set_difference(produced.begin(), produced.end(), expected.begin(), expected.end(),
                        std::back_inserter(v.only_in_generator));
    v.equal = v.only_in_oracle.empty() && v.only_in_generator.empty() && expected.size() == produced.size();
    return v;
}

} // namespace condorcet::oracle
