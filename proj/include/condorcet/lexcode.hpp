// lexcode.hpp -- string representation of never-condition sets

#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace condorcet {

/// A never-condition set over [n]: one code per triple, slots in co-lex triple
/// order, 0 for an unassigned triple.
class ConditionAssignment {
public:
    ConditionAssignment() = default;

    /// The empty assignment over [n].
    explicit ConditionAssignment(int n) : n_(n), codes_(choose3(n), kUnassigned)
    {
        require_alternative_count(n);
    }

    ConditionAssignment(int n, std::vector<Code> codes) : n_(n), codes_(std::move(codes))
    {
        require_alternative_count(n);
        require(codes_.size() == choose3(n), "assignment length must be C(n,3)");
        for (Code c : codes_)
            require(c <= 6, "assignment codes must be in 0..6");
    }

    /// Parses a digit string "4300".
    static ConditionAssignment parse(std::string_view text, int n)
    {
        require(text.size() == choose3(n), "code-string length must be C(n,3)");
        std::vector<Code> codes;
        codes.reserve(text.size());
        for (char ch : text) {
            require(ch >= '0' && ch <= '6', "code-string digits must be 0..6");
            codes.push_back(static_cast<Code>(ch - '0'));
        }
        return ConditionAssignment(n, std::move(codes));
    }

    int alternatives() const { return n_; }
    std::size_t slots() const { return codes_.size(); }

    Code operator[](std::size_t slot) const { return codes_[slot]; }
    Code at(const Triple& t) const { return codes_[triple_index(t, n_)]; }

    void set(std::size_t slot, Code code)
    {
        require(slot < codes_.size() && code <= 6, "set: slot or code out of range");
        codes_[slot] = code;
    }
    void set(const Triple& t, NeverCondition c) { set(triple_index(t, n_), c.code()); }
    void clear(std::size_t slot) { set(slot, kUnassigned); }

    std::span<const Code> codes() const { return codes_; }

    std::size_t assigned_count() const
    {
        std::size_t k = 0;
        for (Code c : codes_) k += c != kUnassigned;
        return k;
    }

    /// Length of the leading run of assigned slots.
    std::size_t assigned_prefix() const
    {
        std::size_t k = 0;
        while (k < codes_.size() && codes_[k] != kUnassigned) ++k;
        return k;
    }

    bool is_prefix_assigned() const { return assigned_prefix() == assigned_count(); }
    bool is_complete() const { return assigned_prefix() == codes_.size(); }

    bool uses_only(const RuleSet& rules) const
    {
        for (Code c : codes_)
            if (c != kUnassigned && !rules.contains(c)) return false;
        return true;
    }

    friend bool operator==(const ConditionAssignment&, const ConditionAssignment&) = default;

    /// Lexicographic order of the code strings. Only meaningful for equal n.
    friend std::strong_ordering operator<=>(const ConditionAssignment& x, const ConditionAssignment& y)
    {
        if (auto c = x.n_ <=> y.n_; c != 0) return c;
        return x.codes_ <=> y.codes_;
    }

private:
    int n_ = 0;
    std::vector<Code> codes_;
};

/// S(N): the code sequence in co-lex triple order.
inline std::span<const Code> encode(const ConditionAssignment& assignment) { return assignment.codes(); }

/// Decimal text form of S(N), one digit per slot.
inline std::string to_code_string(const ConditionAssignment& assignment)
{
    std::string out;
    out.reserve(assignment.slots());
    for (Code c : assignment.codes()) out += static_cast<char>('0' + c);
    return out;
}

inline ConditionAssignment decode(std::string_view text, int n) { return ConditionAssignment::parse(text, n); }

enum class LexOrder { Less, Equal, Greater };

inline LexOrder lex_compare(const ConditionAssignment& x, const ConditionAssignment& y)
{
    require(x.alternatives() == y.alternatives(), "lex_compare: assignments over different n");
    auto c = x.codes().size() == y.codes().size()
        ? std::lexicographical_compare_three_way(x.codes().begin(), x.codes().end(),
                                                 y.codes().begin(), y.codes().end())
        : std::strong_ordering::equal;
    if (c < 0) return LexOrder::Less;
    if (c > 0) return LexOrder::Greater;
    return LexOrder::Equal;
}

/// Alternatives appearing in assigned triples, ascending.
inline std::vector<Alternative> support(const ConditionAssignment& assignment)
{
    std::vector<bool> seen(assignment.alternatives() + 1, false);
    for (std::size_t s = 0; s < assignment.slots(); ++s) {
        if (assignment[s] == kUnassigned) continue;
        auto t = triple_at(s, assignment.alternatives());
        seen[t.a] = seen[t.b] = seen[t.c] = true;
    }
    std::vector<Alternative> out;
    for (int x = 1; x <= assignment.alternatives(); ++x)
        if (seen[x]) out.push_back(static_cast<Alternative>(x));
    return out;
}

/// Largest alternative in the support; 0 for the empty assignment.
inline int support_max(const ConditionAssignment& assignment)
{
    for (std::size_t s = assignment.slots(); s-- > 0;)
        if (assignment[s] != kUnassigned) return triple_at(s, assignment.alternatives()).c;
    return 0;
}

} // namespace condorcet
