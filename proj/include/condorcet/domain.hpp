// domain.hpp -- full domains of never-condition sets and their properties

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "core.hpp"
#include "lexcode.hpp"

namespace condorcet {

/// A set of linear orders on [n], kept sorted and duplicate-free.
class Domain {
public:
    Domain() = default;
    explicit Domain(int n, std::vector<LinearOrder> orders = {}) : n_(n), orders_(std::move(orders))
    {
        for (const auto& o : orders_)
            require(o.size() == n_, "domain orders must all rank n alternatives");
        std::sort(orders_.begin(), orders_.end());
        orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
    }

    int alternatives() const { return n_; }
    std::size_t size() const { return orders_.size(); }
    bool empty() const { return orders_.empty(); }
    const std::vector<LinearOrder>& orders() const { return orders_; }
    bool contains(const LinearOrder& o) const { return std::binary_search(orders_.begin(), orders_.end(), o); }

    friend bool operator==(const Domain&, const Domain&) = default;

private:
    int n_ = 0;
    std::vector<LinearOrder> orders_;
};

namespace detail {

// Inserting alternative k into an order of [k-1]: relative to a < b < k the
// new element lands before both (zone 0), between them (1) or after (2).
// kZonePattern[a_before_b][zone] is the pattern id of (a, b, k).
inline constexpr std::array<std::array<int, 3>, 2> kZonePattern = [] {
    std::array<std::array<int, 3>, 2> t{};
    t[1] = {pattern_id({3, 1, 2}), pattern_id({1, 3, 2}), pattern_id({1, 2, 3})};
    t[0] = {pattern_id({3, 2, 1}), pattern_id({2, 3, 1}), pattern_id({2, 1, 3})};
    return t;
}();

// Zones allowed by every code in a condition mask (bits 1..6).
inline std::uint8_t allowed_zones(bool a_before_b, std::uint8_t condition_bits)
{
    std::uint8_t zones = 0;
    for (int z = 0; z < 3; ++z) {
        const int p = kZonePattern[a_before_b][z];
        bool ok = true;
        for (Code c = 1; c <= 6; ++c)
            if ((condition_bits >> c & 1u) && !kSatisfies[p][c]) ok = false;
        if (ok) zones |= static_cast<std::uint8_t>(1u << z);
    }
    return zones;
}

// Insertion points (0..k-1 elements ahead of k) belonging to a zone set.
constexpr std::uint16_t zone_positions(std::uint8_t zones, int lo, int hi, int k)
{
    std::uint16_t mask = 0;
    auto range = [](int from, int to) -> std::uint16_t {
        return from > to ? 0 : static_cast<std::uint16_t>(((1u << (to + 1)) - 1) & ~((1u << from) - 1));
    };
    if (zones & 1u) mask |= range(0, lo);
    if (zones & 2u) mask |= range(lo + 1, hi);
    if (zones & 4u) mask |= range(hi + 1, k - 1);
    return mask;
}

// Orders on [k] stored as alternative sequences plus inverse positions.
struct OrderTable {
    int k = 0;
    std::vector<std::array<Alternative, kMaxAlternatives>> seq;
    std::vector<std::array<std::uint8_t, kMaxAlternatives + 1>> pos;

    void add(const std::array<Alternative, kMaxAlternatives>& s)
    {
        seq.push_back(s);
        auto& p = pos.emplace_back();
        for (int r = 0; r < k; ++r) p[s[r]] = static_cast<std::uint8_t>(r);
    }

    static OrderTable pairs()
    {
        OrderTable t;
        t.k = 2;
        t.add({1, 2});
        t.add({2, 1});
        return t;
    }

    // Insertion-point mask for each order allowed by the condition sets of
    // the triples (a, b, k+1).
    template <typename ConditionsOf>
    std::vector<std::uint16_t> insertion_masks(ConditionsOf conditions_of) const
    {
        const int next = k + 1;
        std::vector<std::uint16_t> masks(seq.size(), static_cast<std::uint16_t>((1u << next) - 1));
        for (int b = 2; b < next; ++b)
            for (int a = 1; a < b; ++a) {
                std::uint8_t bits = conditions_of(a, b);
                if (bits == 0) continue;
                const std::uint8_t before = allowed_zones(true, bits), after = allowed_zones(false, bits);
                for (std::size_t o = 0; o < seq.size(); ++o) {
                    const int pa = pos[o][a], pb = pos[o][b];
                    masks[o] &= zone_positions(pa < pb ? before : after, std::min(pa, pb), std::max(pa, pb), next);
                }
            }
        return masks;
    }

    OrderTable extend(const std::vector<std::uint16_t>& masks) const
    {
        OrderTable t;
        t.k = k + 1;
        for (std::size_t o = 0; o < seq.size(); ++o)
            for (int q = 0; q <= k; ++q) {
                if (!(masks[o] >> q & 1u)) continue;
                std::array<Alternative, kMaxAlternatives> s{};
                for (int r = 0, w = 0; r <= k; ++r) s[r] = r == q ? static_cast<Alternative>(k + 1) : seq[o][w++];
                t.add(s);
            }
        return t;
    }

    Domain to_domain() const
    {
        std::vector<LinearOrder> orders;
        orders.reserve(seq.size());
        for (const auto& s : seq) orders.emplace_back(std::vector<Alternative>(s.begin(), s.begin() + k));
        return Domain(k, std::move(orders));
    }
};

} // namespace detail

/// All orders on [n] satisfying every condition in conditions[slot] (a
/// ConditionSet per co-lex slot; an empty set leaves the triple free).
inline Domain expand_conditions(int n, const std::vector<ConditionSet>& conditions)
{
    require_alternative_count(n);
    require(conditions.size() == choose3(n), "expand_conditions: one condition set per triple");
    auto table = detail::OrderTable::pairs();
    for (int k = 3; k <= n; ++k) {
        auto masks = table.insertion_masks([&](int a, int b) {
            return conditions[triple_index(Triple{static_cast<Alternative>(a), static_cast<Alternative>(b),
                                                  static_cast<Alternative>(k)}, n)].bits();
        });
        table = table.extend(masks);
    }
    return table.to_domain();
}

/// The full domain of a complete assignment.
inline Domain expand(const ConditionAssignment& assignment)
{
    require(assignment.is_complete(), "expand: assignment must be complete");
    std::vector<ConditionSet> conditions(assignment.slots());
    for (std::size_t s = 0; s < assignment.slots(); ++s) conditions[s].insert(assignment[s]);
    return expand_conditions(assignment.alternatives(), conditions);
}

inline bool is_unitary(const Domain& domain)
{
    return !domain.empty() && domain.contains(LinearOrder::standard(domain.alternatives()));
}

namespace detail {

// Bitmask of pattern ids realised by the domain on each co-lex triple.
inline std::vector<std::uint8_t> pattern_masks(const Domain& domain)
{
    const int n = domain.alternatives();
    std::vector<std::uint8_t> masks(choose3(n), 0);
    auto triples = colex_triples(n);
    for (const auto& o : domain.orders())
        for (std::size_t s = 0; s < triples.size(); ++s)
            masks[s] |= static_cast<std::uint8_t>(1u << pattern_id(restrict(o, triples[s])));
    return masks;
}

// Whether a set of realised patterns avoids all patterns violating some
// condition. With formal = true the invalid forms 1N1, 2N2, 3N3 count too.
inline bool admits_condition(std::uint8_t patterns, bool formal)
{
    for (Code c = 1; c <= 6; ++c)
        if ((patterns & kViolatingPatterns[c]) == 0) return true;
    if (formal)
        for (int i = 1; i <= 3; ++i) {
            std::uint8_t violating = 0;
            for (int p = 0; p < 6; ++p)
                if (!pattern_satisfies(kPatterns[p], NeverCondition{i, i})) violating |= static_cast<std::uint8_t>(1u << p);
            if ((patterns & violating) == 0) return true;
        }
    return false;
}

} // namespace detail

inline bool is_copious(const Domain& domain)
{
    if (domain.alternatives() < 3) return false;
    for (auto mask : detail::pattern_masks(domain))
        if (std::popcount(mask) != 4) return false;
    return true;
}

/// The valid never conditions satisfied on t by every order of the domain.
inline ConditionSet satisfied_conditions(const Domain& domain, const Triple& t)
{
    require(!domain.empty(), "satisfied_conditions: domain must be non-empty");
    std::uint8_t patterns = 0;
    for (const auto& o : domain.orders()) patterns |= static_cast<std::uint8_t>(1u << pattern_id(restrict(o, t)));
    ConditionSet out;
    for (Code c = 1; c <= 6; ++c)
        if ((patterns & detail::kViolatingPatterns[c]) == 0) out.insert(c);
    return out;
}

enum class MaximalityCheck {
    SixConditions, ///< the valid Fishburn conditions only
    AllNineCells,  ///< also 1N1, 2N2, 3N3
};

/// Whether no order outside the domain can be added while every triple still
/// satisfies some never condition. Candidates are built by inserting
/// alternatives one at a time and pruned on the first failing triple.
inline bool is_maximal(const Domain& domain, MaximalityCheck check = MaximalityCheck::SixConditions)
{
    const int n = domain.alternatives();
    require_alternative_count(n);
    const bool formal = check == MaximalityCheck::AllNineCells;
    const auto masks = detail::pattern_masks(domain);

    std::array<Alternative, kMaxAlternatives> seq{};
    std::array<std::uint8_t, kMaxAlternatives + 1> pos{};

    // Depth-first over candidates on [k]; returns true once an addable order is found.
    auto addable = [&](auto&& self, int k) -> bool {
        if (k > n) {
            LinearOrder candidate(std::vector<Alternative>(seq.begin(), seq.begin() + n));
            return !domain.contains(candidate);
        }
        for (int q = 0; q < k; ++q) {
            // insert k at rank q
            for (int r = k - 1; r > q; --r) seq[r] = seq[r - 1];
            seq[q] = static_cast<Alternative>(k);
            for (int r = 0; r < k; ++r) pos[seq[r]] = static_cast<std::uint8_t>(r);
            bool ok = true;
            for (int b = 2; b < k && ok; ++b)
                for (int a = 1; a < b && ok; ++a) {
                    const int pa = pos[a], pb = pos[b], pk = pos[k];
                    const int zone = pk < std::min(pa, pb) ? 0 : (pk < std::max(pa, pb) ? 1 : 2);
                    const int p = detail::kZonePattern[pa < pb][zone];
                    const auto slot = detail::slot_of(a, b, k);
                    ok = detail::admits_condition(static_cast<std::uint8_t>(masks[slot] | (1u << p)), formal);
                }
            if (ok && self(self, k + 1)) return true;
            for (int r = q; r < k - 1; ++r) seq[r] = seq[r + 1];
        }
        return false;
    };
    seq[0] = 1;
    seq[1] = 2;
    if (addable(addable, 3)) return false;
    seq[0] = 2;
    seq[1] = 1;
    return !addable(addable, 3);
}

/// Domain size -> number of classes, iterated in ascending size.
class SizeHistogram {
public:
    void add(std::size_t size, std::uint64_t count = 1)
    {
        require(size > 0 && count > 0, "histogram entries must be positive");
        counts_[size] += count;
    }

    std::uint64_t total() const
    {
        std::uint64_t t = 0;
        for (const auto& [size, count] : counts_) t += count;
        return t;
    }

    std::uint64_t count(std::size_t size) const
    {
        auto it = counts_.find(size);
        return it == counts_.end() ? 0 : it->second;
    }

    const std::map<std::size_t, std::uint64_t>& entries() const { return counts_; }
    bool empty() const { return counts_.empty(); }

    friend bool operator==(const SizeHistogram&, const SizeHistogram&) = default;

private:
    std::map<std::size_t, std::uint64_t> counts_;
};

template <typename Range>
SizeHistogram histogram(const Range& leaves)
{
    SizeHistogram h;
    for (const ConditionAssignment& leaf : leaves) h.add(expand(leaf).size());
    return h;
}

} // namespace condorcet
