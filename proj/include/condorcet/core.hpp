// core.hpp -- alternatives, triples, never conditions and linear orders

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace condorcet {

/// An alternative in [n] = {1, ..., n}.
using Alternative = std::uint8_t;

/// Condition code stored in an assignment slot: 0 = unassigned, 1..6 = a
/// valid never condition, kInvalidCode = one of 1N1/2N2/3N3.
using Code = std::uint8_t;

inline constexpr Code kUnassigned = 0;
inline constexpr Code kInvalidCode = 7;

/// Largest number of alternatives the engine accepts. C(12,3) = 220 slots.
inline constexpr int kMaxAlternatives = 12;

/// Raised when a documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const char* what)
{
    if (!ok)
        throw PreconditionError(what);
}

constexpr std::size_t choose3(int n)
{
    return n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
}

inline void require_alternative_count(int n)
{
    if (n < 3 || n > kMaxAlternatives)
        throw PreconditionError("number of alternatives must be in 3..12, got " + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Triples
// ---------------------------------------------------------------------------

/// Three alternatives a < b < c.
struct Triple {
    Alternative a = 1, b = 2, c = 3;

    constexpr Alternative operator[](int k) const { return k == 0 ? a : (k == 1 ? b : c); }
    constexpr bool contains(Alternative x) const { return x == a || x == b || x == c; }
    friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

constexpr bool is_valid_triple(const Triple& t, int n)
{
    return 1 <= t.a && t.a < t.b && t.b < t.c && t.c <= n;
}

/// Builds a triple from three distinct alternatives in any order.
constexpr Triple sorted_triple(Alternative x, Alternative y, Alternative z)
{
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return Triple{x, y, z};
}

/// Rank of t in co-lex order (compare c, then b, then a). 0-based.
inline std::size_t triple_index(const Triple& t, int n)
{
    require(is_valid_triple(t, n), "triple_index: triple must be ascending and within [n]");
    return choose3(t.c - 1) + static_cast<std::size_t>(t.b - 1) * (t.b - 2) / 2 + (t.a - 1);
}

/// Inverse of triple_index.
inline Triple triple_at(std::size_t index, int n)
{
    require(index < choose3(n), "triple_at: index out of range");
    int c = 3;
    while (choose3(c) <= index) ++c;
    index -= choose3(c - 1);
    int b = 2;
    while (static_cast<std::size_t>(b) * (b - 1) / 2 <= index) ++b;
    index -= static_cast<std::size_t>(b - 1) * (b - 2) / 2;
    return Triple{static_cast<Alternative>(index + 1), static_cast<Alternative>(b),
                  static_cast<Alternative>(c)};
}

/// All C(n,3) triples in co-lex order.
inline std::vector<Triple> colex_triples(int n)
{
    std::vector<Triple> out;
    out.reserve(choose3(n));
    for (int c = 3; c <= n; ++c)
        for (int b = 2; b < c; ++b)
            for (int a = 1; a < b; ++a)
                out.push_back(Triple{static_cast<Alternative>(a), static_cast<Alternative>(b),
                                     static_cast<Alternative>(c)});
    return out;
}

// ---------------------------------------------------------------------------
// Never conditions
// ---------------------------------------------------------------------------

/// Fishburn-form condition iNj: the i-th smallest alternative of a triple is
/// never ranked j-th among the three. Only i != j is valid for unitary domains.
struct NeverCondition {
    int position = 1; // i, 1..3
    int rank = 2;     // j, 1..3

    constexpr bool is_valid() const
    {
        return position >= 1 && position <= 3 && rank >= 1 && rank <= 3 && position != rank;
    }

    /// 1N2->1, 1N3->2, 2N1->3, 2N3->4, 3N1->5, 3N2->6; kInvalidCode when i == j.
    constexpr Code code() const
    {
        if (!is_valid())
            return kInvalidCode;
        return static_cast<Code>(2 * (position - 1) + (rank < position ? rank : rank - 1));
    }

    static constexpr NeverCondition from_code(Code code)
    {
        if (code < 1 || code > 6)
            throw PreconditionError("never condition code must be in 1..6");
        int i = (code - 1) / 2 + 1;
        int r = (code - 1) % 2 + 1;
        return NeverCondition{i, r < i ? r : r + 1};
    }

    std::string token() const
    {
        return std::to_string(position) + "N" + std::to_string(rank);
    }

    friend constexpr bool operator==(const NeverCondition&, const NeverCondition&) = default;
};

inline constexpr std::string_view kValidTokens = "1N2, 1N3, 2N1, 2N3, 3N1, 3N2";

/// Parses "2N3" (case-insensitive). Rejects the three invalid forms.
inline std::optional<NeverCondition> parse_condition(std::string_view token)
{
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.size() != 3 || (token[1] != 'N' && token[1] != 'n'))
        return std::nullopt;
    if (token[0] < '1' || token[0] > '3' || token[2] < '1' || token[2] > '3')
        return std::nullopt;
    NeverCondition nc{token[0] - '0', token[2] - '0'};
    if (!nc.is_valid())
        return std::nullopt;
    return nc;
}

/// A set of condition codes 1..6.
class ConditionSet {
public:
    constexpr ConditionSet() = default;
    constexpr ConditionSet(std::initializer_list<NeverCondition> conds)
    {
        for (const auto& c : conds) insert(c.code());
    }

    static constexpr ConditionSet from_bits(std::uint8_t bits) { ConditionSet s; s.bits_ = bits & 0x7E; return s; }
    static constexpr ConditionSet all() { return from_bits(0x7E); }

    constexpr void insert(Code code)
    {
        if (code >= 1 && code <= 6)
            bits_ |= static_cast<std::uint8_t>(1u << code);
    }
    constexpr bool contains(Code code) const { return code >= 1 && code <= 6 && ((bits_ >> code) & 1u); }
    constexpr bool contains(const NeverCondition& c) const { return contains(c.code()); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr std::uint8_t bits() const { return bits_; }

    /// Codes in ascending order.
    std::vector<Code> codes() const
    {
        std::vector<Code> out;
        for (Code c = 1; c <= 6; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }

    /// Comma-separated tokens in ascending code order, e.g. "1N3,2N1".
    std::string tokens() const
    {
        std::string out;
        for (Code c : codes()) {
            if (!out.empty()) out += ',';
            out += NeverCondition::from_code(c).token();
        }
        return out;
    }

    friend constexpr bool operator==(const ConditionSet&, const ConditionSet&) = default;

private:
    std::uint8_t bits_ = 0;
};

/// The allowed never conditions of a search. Never empty.
class RuleSet {
public:
    explicit RuleSet(ConditionSet allowed) : allowed_(allowed)
    {
        require(!allowed.empty(), "rule set must contain at least one never condition");
    }
    RuleSet(std::initializer_list<NeverCondition> conds) : RuleSet(ConditionSet(conds)) {}

    static RuleSet all() { return RuleSet(ConditionSet::all()); }

    /// Parses a comma list such as "2N3,2N1". Throws PreconditionError naming
    /// the valid tokens on a bad entry.
    static RuleSet parse(std::string_view list)
    {
        ConditionSet s;
        std::size_t start = 0;
        while (start <= list.size()) {
            auto end = list.find(',', start);
            if (end == std::string_view::npos) end = list.size();
            auto token = list.substr(start, end - start);
            auto nc = parse_condition(token);
            if (!nc)
                throw PreconditionError("invalid never condition '" + std::string(token) +
                                        "'; valid tokens are " + std::string(kValidTokens));
            s.insert(nc->code());
            start = end + 1;
        }
        return RuleSet(s);
    }

    constexpr bool contains(Code code) const { return allowed_.contains(code); }
    const ConditionSet& conditions() const { return allowed_; }
    std::vector<Code> codes() const { return allowed_.codes(); }
    int size() const { return allowed_.size(); }
    std::string tokens() const { return allowed_.tokens(); }

    friend bool operator==(const RuleSet&, const RuleSet&) = default;

private:
    ConditionSet allowed_;
};

// ---------------------------------------------------------------------------
// Patterns: the restriction of an order to a triple
// ---------------------------------------------------------------------------

/// pattern[k] = position-in-triple (1..3) of the element ranked k-th.
using Pattern = std::array<std::uint8_t, 3>;

namespace detail {

inline constexpr std::array<Pattern, 6> kPatterns{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};

constexpr int pattern_id(const Pattern& p)
{
    for (int k = 0; k < 6; ++k)
        if (kPatterns[k] == p) return k;
    return -1;
}

// kSatisfies[pattern][code]; code 0 and 7 unused.
inline constexpr auto kSatisfies = [] {
    std::array<std::array<bool, 8>, 6> table{};
    for (int p = 0; p < 6; ++p)
        for (Code code = 1; code <= 6; ++code) {
            auto nc = NeverCondition::from_code(code);
            table[p][code] = kPatterns[p][nc.rank - 1] != nc.position;
        }
    return table;
}();

// Bitmask of patterns that violate each code.
inline constexpr auto kViolatingPatterns = [] {
    std::array<std::uint8_t, 8> masks{};
    for (Code code = 1; code <= 6; ++code)
        for (int p = 0; p < 6; ++p)
            if (!kSatisfies[p][code]) masks[code] |= static_cast<std::uint8_t>(1u << p);
    return masks;
}();

inline constexpr auto kChoose3 = [] {
    std::array<std::uint32_t, kMaxAlternatives + 2> v{};
    for (int k = 0; k < static_cast<int>(v.size()); ++k) v[k] = static_cast<std::uint32_t>(choose3(k));
    return v;
}();

// Co-lex slot of a < b < c without range checks.
constexpr std::uint32_t slot_of(int a, int b, int c)
{
    return kChoose3[c - 1] + static_cast<std::uint32_t>(b - 1) * (b - 2) / 2 + (a - 1);
}

} // namespace detail

constexpr int pattern_id(const Pattern& p) { return detail::pattern_id(p); }
constexpr const Pattern& pattern_from_id(int id) { return detail::kPatterns[id]; }

// ---------------------------------------------------------------------------
// Linear orders
// ---------------------------------------------------------------------------

/// A preference order, most-preferred first.
class LinearOrder {
public:
    LinearOrder() = default;
    explicit LinearOrder(std::vector<Alternative> seq) : seq_(std::move(seq))
    {
        require(is_permutation_of_n(seq_), "linear order must be a permutation of 1..n");
        index_positions();
    }
    LinearOrder(std::initializer_list<int> seq)
        : LinearOrder(std::vector<Alternative>(seq.begin(), seq.end()))
    {
    }

    static LinearOrder standard(int n)
    {
        std::vector<Alternative> s(n);
        std::iota(s.begin(), s.end(), Alternative{1});
        return LinearOrder(std::move(s));
    }

    /// Parses "41325" (n <= 9) or "1,10,2,..." (any n).
    static LinearOrder parse(std::string_view text)
    {
        std::vector<Alternative> s;
        if (text.find(',') == std::string_view::npos) {
            for (char ch : text) {
                require(ch >= '1' && ch <= '9', "linear order digit must be 1..9");
                s.push_back(static_cast<Alternative>(ch - '0'));
            }
        } else {
            std::size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find(',', start);
                if (end == std::string_view::npos) end = text.size();
                s.push_back(static_cast<Alternative>(std::stoi(std::string(text.substr(start, end - start)))));
                start = end + 1;
            }
        }
        return LinearOrder(std::move(s));
    }

    int size() const { return static_cast<int>(seq_.size()); }
    const std::vector<Alternative>& sequence() const { return seq_; }
    Alternative operator[](int rank) const { return seq_[rank]; }
    /// 0-based rank of alternative x.
    int rank_of(Alternative x) const { return pos_[x]; }

    std::string to_string() const
    {
        std::string out;
        bool digits = size() <= 9;
        for (std::size_t k = 0; k < seq_.size(); ++k) {
            if (!digits && k > 0) out += ',';
            out += std::to_string(seq_[k]);
        }
        return out;
    }

    friend bool operator==(const LinearOrder& x, const LinearOrder& y) { return x.seq_ == y.seq_; }
    friend auto operator<=>(const LinearOrder& x, const LinearOrder& y) { return x.seq_ <=> y.seq_; }

private:
    static bool is_permutation_of_n(const std::vector<Alternative>& s)
    {
        std::vector<bool> seen(s.size() + 1, false);
        for (auto x : s) {
            if (x < 1 || x > s.size() || seen[x]) return false;
            seen[x] = true;
        }
        return true;
    }

    void index_positions()
    {
        pos_.assign(seq_.size() + 1, 0);
        for (std::size_t k = 0; k < seq_.size(); ++k) pos_[seq_[k]] = static_cast<int>(k);
    }

    std::vector<Alternative> seq_;
    std::vector<int> pos_;
};

/// Relative ranking of t's elements in order, as positions-in-triple.
inline Pattern restrict(const LinearOrder& order, const Triple& t)
{
    require(is_valid_triple(t, order.size()), "restrict: triple outside the order's alternatives");
    std::array<std::pair<int, std::uint8_t>, 3> ranked{{
        {order.rank_of(t.a), 1}, {order.rank_of(t.b), 2}, {order.rank_of(t.c), 3},
    }};
    std::sort(ranked.begin(), ranked.end());
    return Pattern{ranked[0].second, ranked[1].second, ranked[2].second};
}

/// Whether a pattern satisfies a (possibly invalid) condition iNj: pattern[j] != i.
constexpr bool pattern_satisfies(const Pattern& p, const NeverCondition& c)
{
    return p[c.rank - 1] != c.position;
}

inline bool satisfies(const LinearOrder& order, const Triple& t, const NeverCondition& c)
{
    auto p = restrict(order, t);
    if (c.is_valid())
        return detail::kSatisfies[pattern_id(p)][c.code()];
    return pattern_satisfies(p, c);
}

} // namespace condorcet
