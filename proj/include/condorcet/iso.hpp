// iso.hpp -- relabelings of alternatives acting on never-condition sets, and
// the lexicographic maximality tests that drive orderly generation.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "core.hpp"
#include "lexcode.hpp"

namespace condorcet {

/// A bijection of [m]; acts as the identity on alternatives above m.
class Permutation {
public:
    Permutation() = default;

    /// images[x-1] is the image of x.
    explicit Permutation(std::vector<Alternative> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size() + 1, false);
        for (auto y : images_) {
            require(y >= 1 && y <= images_.size() && !seen[y], "permutation images must be a bijection of [m]");
            seen[y] = true;
        }
    }
    Permutation(std::initializer_list<int> images)
        : Permutation(std::vector<Alternative>(images.begin(), images.end()))
    {
    }

    static Permutation identity(int m)
    {
        std::vector<Alternative> v(m);
        std::iota(v.begin(), v.end(), Alternative{1});
        return Permutation(std::move(v));
    }

    static Permutation transposition(int m, Alternative x, Alternative y)
    {
        auto p = identity(m);
        std::swap(p.images_[x - 1], p.images_[y - 1]);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }

    Alternative operator()(Alternative x) const
    {
        return x >= 1 && x <= images_.size() ? images_[x - 1] : x;
    }

    /// (this after first)(x) = this(first(x)).
    Permutation after(const Permutation& first) const
    {
        int m = std::max(degree(), first.degree());
        std::vector<Alternative> v(m);
        for (int x = 1; x <= m; ++x) v[x - 1] = (*this)(first(static_cast<Alternative>(x)));
        return Permutation(std::move(v));
    }

    Permutation inverse() const
    {
        std::vector<Alternative> v(images_.size());
        for (std::size_t x = 0; x < images_.size(); ++x) v[images_[x] - 1] = static_cast<Alternative>(x + 1);
        return Permutation(std::move(v));
    }

    const std::vector<Alternative>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Alternative> images_;
};

inline Triple apply_to_triple(const Permutation& g, const Triple& t)
{
    return sorted_triple(g(t.a), g(t.b), g(t.c));
}

/// The condition induced on g(t) by c on t. The result has position == rank
/// (an invalid condition) when the relabeling leaves the unitary form.
inline NeverCondition induced_condition(const Triple& t, const NeverCondition& c, const Permutation& g)
{
    require(c.position >= 1 && c.position <= 3 && c.rank >= 1 && c.rank <= 3,
            "induced_condition: condition indices must be in 1..3");
    Alternative image = g(t[c.position - 1]);
    Triple t2 = apply_to_triple(g, t);
    int position = image == t2.a ? 1 : (image == t2.b ? 2 : 3);
    return NeverCondition{position, c.rank};
}

/// g(N), or nullopt when some assigned triple induces a condition outside R.
inline std::optional<ConditionAssignment> transform(const ConditionAssignment& assignment, const Permutation& g,
                                                    const RuleSet& rules)
{
    const int n = assignment.alternatives();
    require(g.degree() <= n, "transform: permutation moves alternatives outside [n]");
    ConditionAssignment out(n);
    for (std::size_t s = 0; s < assignment.slots(); ++s) {
        Code code = assignment[s];
        if (code == kUnassigned) continue;
        Triple t = triple_at(s, n);
        Code induced = induced_condition(t, NeverCondition::from_code(code), g).code();
        if (!rules.contains(induced)) return std::nullopt;
        out.set(triple_index(apply_to_triple(g, t), n), induced);
    }
    return out;
}

namespace detail {

// Relabeling of triple positions, indexed like kPatterns: sigma[i-1] is the
// position in the image triple of the preimage's i-th element.
// kInduce[sigma][code] is the induced code (kInvalidCode when i' == j).
inline constexpr auto kInduce = [] {
    std::array<std::array<Code, 8>, 6> table{};
    for (int s = 0; s < 6; ++s) {
        table[s][kUnassigned] = kUnassigned;
        table[s][kInvalidCode] = kInvalidCode;
        for (Code code = 1; code <= 6; ++code) {
            auto nc = NeverCondition::from_code(code);
            table[s][code] = NeverCondition{kPatterns[s][nc.position - 1], nc.rank}.code();
        }
    }
    return table;
}();

inline constexpr int kSwapFirstTwo = 2; // sigma = (2,1,3)

// For image triple (x<y<z) with preimages (hx, hy, hz): index by
// [hx<hy][hx<hz][hy<hz] -> sigma id.
inline constexpr auto kSigmaFromOrder = [] {
    std::array<std::int8_t, 8> table{};
    table.fill(-1);
    for (int s = 0; s < 6; ++s) {
        // sigma maps preimage position i to image position sigma[i-1];
        // the image element at position p has preimage rank r[p] with sigma[r[p]-1] = p+1.
        std::array<int, 3> r{};
        for (int i = 0; i < 3; ++i) r[kPatterns[s][i] - 1] = i + 1;
        int key = (r[0] < r[1]) << 2 | (r[0] < r[2]) << 1 | (r[1] < r[2]);
        table[key] = static_cast<std::int8_t>(s);
    }
    return table;
}();

// Searches relabelings h = g^-1 of [m] built one alternative at a time. After
// h(1..k) is fixed, every slot whose triple lies in [k] is determined in g(N),
// so rule checks and the lexicographic comparison advance level by level.
class GreaterImageSearch {
public:
    GreaterImageSearch(const ConditionAssignment& assignment, const RuleSet& rules, int m)
        : codes_(assignment.codes().data()), assigned_(assignment.assigned_prefix()), m_(m)
    {
        for (int s = 0; s < 6; ++s) {
            closed_[s] = true;
            for (Code c : rules.codes()) closed_[s] = closed_[s] && rules.contains(kInduce[s][c]);
            for (Code c = 0; c < 8; ++c) allowed_[s][c] = rules.contains(kInduce[s][c]);
        }
    }

    bool swap_first_two_closed() const { return closed_[kSwapFirstTwo]; }

    /// True iff some surviving relabeling of [m] yields g(N) > N.
    bool found() { return extend(1, false); }

private:
    bool extend(int k, bool greater)
    {
        if (k > m_) return greater;
        for (int v = 1; v <= m_; ++v) {
            if (used_ >> v & 1u) continue;
            h_[k] = static_cast<Alternative>(v);
            bool now_greater = greater;
            if (!level_survives(k, now_greater)) continue;
            used_ |= 1u << v;
            bool hit = extend(k + 1, now_greater);
            used_ &= ~(1u << v);
            if (hit) return true;
        }
        return false;
    }

    // Checks the slots of triples (a, b, k). Returns false to prune.
    bool level_survives(int k, bool& greater) const
    {
        if (k < 3) return true;
        const Alternative hk = h_[k];
        std::uint32_t slot = kChoose3[k - 1];
        for (int b = 2; b < k; ++b) {
            const Alternative hb = h_[b];
            for (int a = 1; a < b; ++a, ++slot) {
                const Alternative ha = h_[a];
                const int key = (ha < hb) << 2 | (ha < hk) << 1 | (hb < hk);
                const int sigma = kSigmaFromOrder[key];
                Alternative lo = ha, mid = hb, hi = hk;
                if (lo > mid) std::swap(lo, mid);
                if (mid > hi) std::swap(mid, hi);
                if (lo > mid) std::swap(lo, mid);
                const std::uint32_t pre = slot_of(lo, mid, hi);
                Code image;
                if (pre < assigned_) {
                    image = kInduce[sigma][codes_[pre]];
                    if (!allowed_[sigma][codes_[pre]]) return false;          // (a)
                } else {
                    if (slot < assigned_) return false;                       // (c)
                    if (!closed_[sigma]) return false;                        // (b)
                    image = kUnassigned;
                }
                if (!greater) {
                    const Code own = slot < assigned_ ? codes_[slot] : kUnassigned;
                    if (image < own) return false;
                    greater = image > own;
                }
            }
        }
        return true;
    }

    const Code* codes_;
    std::size_t assigned_;
    int m_;
    std::array<bool, 6> closed_{};
    std::array<std::array<bool, 8>, 6> allowed_{};
    std::array<Alternative, kMaxAlternatives + 1> h_{};
    std::uint32_t used_ = 0;
};

} // namespace detail

/// Partial lexicographic maximality: false iff a relabeling of [m]
/// (m = largest supported alternative) maps N to a lexicographically larger
/// set while inducing allowed conditions on assigned triples, mapping every
/// allowed condition on unassigned triples to an allowed one, and never
/// moving an unassigned triple onto an assigned slot.
inline bool is_partially_lex_max(const ConditionAssignment& assignment, const RuleSet& rules)
{
    require(assignment.is_prefix_assigned(), "is_partially_lex_max: assigned slots must form a co-lex prefix");
    const int n = assignment.alternatives();
    const int m = support_max(assignment);
    if (m == 0) return true;
    detail::GreaterImageSearch search(assignment, rules, m);
    // With m < n, a triple {x, y, z > m} sees the position swap (1 2) whenever
    // x, y are inverted; if R is not closed under it only the identity survives.
    if (m < n && !search.swap_first_two_closed()) return true;
    return !search.found();
}

/// Exact canonicity of a complete assignment: no relabeling of [n] whose
/// image stays inside R is lexicographically larger.
inline bool is_canonical_complete(const ConditionAssignment& assignment, const RuleSet& rules)
{
    require(assignment.is_complete(), "is_canonical_complete: assignment must be complete");
    detail::GreaterImageSearch search(assignment, rules, assignment.alternatives());
    return !search.found();
}

/// Lexicographically largest R-respecting image of a complete assignment,
/// by exhausting all n! relabelings.
inline ConditionAssignment canonical_form(const ConditionAssignment& assignment, const RuleSet& rules)
{
    require(assignment.is_complete(), "canonical_form: assignment must be complete");
    auto best = assignment;
    auto g = Permutation::identity(assignment.alternatives());
    auto images = g.images();
    do {
        if (auto image = transform(assignment, Permutation(images), rules); image && *image > best)
            best = *image;
    } while (std::next_permutation(images.begin(), images.end()));
    return best;
}

} // namespace condorcet
