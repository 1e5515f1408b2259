#include <gtest/gtest.h>

#include <condorcet/core.hpp>

using namespace condorcet;

TEST(TripleIndex, ColexOrderForFourAlternatives)
{
    EXPECT_EQ(triple_index({1, 2, 3}, 4), 0u);
    EXPECT_EQ(triple_index({1, 2, 4}, 4), 1u);
    EXPECT_EQ(triple_index({1, 3, 4}, 4), 2u);
    EXPECT_EQ(triple_index({2, 3, 4}, 4), 3u);
}

TEST(TripleIndex, FirstTripleWithLargestFive)
{
    EXPECT_EQ(triple_index({1, 2, 5}, 5), 4u);
    EXPECT_EQ(triple_at(9, 5), (Triple{3, 4, 5}));
}

TEST(TripleIndex, RejectsInvalidTriples)
{
    EXPECT_THROW(triple_index({2, 1, 3}, 4), PreconditionError);
    EXPECT_THROW(triple_index({1, 1, 3}, 4), PreconditionError);
    EXPECT_THROW(triple_index({1, 2, 5}, 4), PreconditionError);
    EXPECT_THROW(triple_index({0, 2, 3}, 4), PreconditionError);
    EXPECT_THROW(triple_at(4, 4), PreconditionError);
}

TEST(TripleIndex, InverseOfTripleAtForEverySize)
{
    for (int n = 3; n <= kMaxAlternatives; ++n) {
        auto triples = colex_triples(n);
        ASSERT_EQ(triples.size(), choose3(n));
        for (std::size_t s = 0; s < triples.size(); ++s) {
            EXPECT_EQ(triple_index(triples[s], n), s);
            EXPECT_EQ(triple_at(s, n), triples[s]);
        }
    }
}

TEST(NeverConditionTokens, CodeTable)
{
    const char* tokens[] = {"1N2", "1N3", "2N1", "2N3", "3N1", "3N2"};
    for (Code code = 1; code <= 6; ++code) {
        auto nc = NeverCondition::from_code(code);
        EXPECT_EQ(nc.code(), code);
        EXPECT_EQ(nc.token(), tokens[code - 1]);
        EXPECT_EQ(parse_condition(tokens[code - 1])->code(), code);
    }
    EXPECT_EQ(parse_condition("2n3")->code(), 4);
}

TEST(NeverConditionTokens, RejectsDiagonalAndGarbage)
{
    EXPECT_FALSE(parse_condition("2N2"));
    EXPECT_FALSE(parse_condition("1N1"));
    EXPECT_FALSE(parse_condition("4N1"));
    EXPECT_FALSE(parse_condition("2X3"));
    EXPECT_FALSE(parse_condition(""));
    EXPECT_FALSE((NeverCondition{3, 3}.is_valid()));
}

TEST(RuleSetParse, ListsAndErrors)
{
    auto r = RuleSet::parse("2N3,2N1");
    EXPECT_EQ(r.size(), 2);
    EXPECT_TRUE(r.contains(4));
    EXPECT_TRUE(r.contains(3));
    EXPECT_EQ(r.tokens(), "2N1,2N3");
    EXPECT_EQ(RuleSet::parse("1N2,1N3,2N1,2N3,3N1,3N2"), RuleSet::all());

    try {
        RuleSet::parse("2N3,2N2");
        FAIL() << "2N2 accepted";
    } catch (const PreconditionError& e) {
        std::string what = e.what();
        EXPECT_NE(what.find("2N2"), std::string::npos);
        for (const char* t : {"1N2", "1N3", "2N1", "2N3", "3N1", "3N2"}) EXPECT_NE(what.find(t), std::string::npos);
    }
    EXPECT_THROW(RuleSet::parse(""), PreconditionError);
    EXPECT_THROW(RuleSet(ConditionSet{}), PreconditionError);
}

TEST(LinearOrderParse, DigitsAndCommas)
{
    EXPECT_EQ(LinearOrder::parse("231"), (LinearOrder{2, 3, 1}));
    auto ten = LinearOrder::parse("10,9,8,7,6,5,4,3,2,1");
    EXPECT_EQ(ten.size(), 10);
    EXPECT_EQ(ten.to_string(), "10,9,8,7,6,5,4,3,2,1");
    EXPECT_EQ(LinearOrder::standard(5).to_string(), "12345");
    EXPECT_THROW(LinearOrder::parse("122"), PreconditionError);
    EXPECT_THROW(LinearOrder::parse("124"), PreconditionError);
}

TEST(Restrict, Examples)
{
    for (const auto& t : colex_triples(6)) EXPECT_EQ(restrict(LinearOrder::standard(6), t), (Pattern{1, 2, 3}));
    EXPECT_EQ(restrict(LinearOrder::parse("231"), {1, 2, 3}), (Pattern{2, 3, 1}));
    EXPECT_EQ(restrict(LinearOrder::parse("41325"), {1, 3, 4}), (Pattern{3, 1, 2}));
}

TEST(Satisfies, Examples)
{
    const auto standard = LinearOrder::standard(5);
    for (const auto& t : colex_triples(5))
        for (Code c = 1; c <= 6; ++c) EXPECT_TRUE(satisfies(standard, t, NeverCondition::from_code(c)));

    EXPECT_FALSE(satisfies(LinearOrder::parse("132"), {1, 2, 3}, NeverCondition{2, 3}));
    EXPECT_FALSE(satisfies(LinearOrder::parse("213"), {1, 2, 3}, NeverCondition{2, 1}));
    EXPECT_TRUE(satisfies(LinearOrder::parse("213"), {1, 2, 3}, NeverCondition{2, 3}));
}

// Each pattern hits one cell per rank; hits on the diagonal cost no valid condition.
TEST(Satisfies, EachPatternViolatesOneCellPerRank)
{
    for (int p = 0; p < 6; ++p) {
        const auto& pattern = pattern_from_id(p);
        int violated = 0, valid_satisfied = 0, fixed = 0;
        for (int k = 0; k < 3; ++k) fixed += pattern[k] == k + 1;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const bool hit = pattern[j - 1] == i;
                violated += hit;
                if (i != j && !hit) ++valid_satisfied;
                if (i != j) EXPECT_EQ(pattern_satisfies(pattern, NeverCondition{i, j}), !hit);
            }
        EXPECT_EQ(violated, 3);
        EXPECT_EQ(valid_satisfied, 3 + fixed);
        if (pattern == Pattern{1, 2, 3}) EXPECT_EQ(valid_satisfied, 6);
        if (pattern == Pattern{2, 3, 1}) EXPECT_EQ(valid_satisfied, 3);
        if (pattern == Pattern{1, 3, 2}) EXPECT_EQ(valid_satisfied, 4);
    }
}
