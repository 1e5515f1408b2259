#include <gtest/gtest.h>

#include <condorcet/condorcet.hpp>

#include "support.hpp"

using namespace condorcet;

TEST(BruteForce, Examples)
{
    auto three = oracle::brute_force_classes(3, RuleSet::all());
    EXPECT_EQ(fixtures::code_strings(three.canonicals()), (std::vector<std::string>{"4", "5", "6"}));
    for (const auto& orbit : three.orbits) EXPECT_EQ(orbit.orbit_size, 2u);

    EXPECT_EQ(fixtures::code_strings(oracle::brute_force_classes(3, fixtures::kPeakPit23).canonicals()),
              (std::vector<std::string>{"3", "4"}));
    EXPECT_EQ(oracle::brute_force_classes(4, RuleSet{NeverCondition{2, 3}}).class_count(), 1u);
}

TEST(BruteForce, RefusesBeyondTheGuard)
{
    try {
        oracle::brute_force_classes(6, RuleSet::all());
        FAIL() << "guard not applied";
    } catch (const oracle::GuardError& e) {
        EXPECT_NE(std::string(e.what()).find("1e9"), std::string::npos);
    }
}

TEST(BruteForce, OrbitStabilizerConsistency)
{
    for (int n = 3; n <= 4; ++n)
        for (const auto& rules : {RuleSet::all(), fixtures::kPeakPit23, fixtures::kPeakPit13, fixtures::kMixed}) {
            std::uint64_t covered = 0;
            for (const auto& orbit : oracle::brute_force_classes(n, rules).orbits) {
                EXPECT_EQ(orbit.orbit_size * orbit.stabilizer_size, orbit.respecting_relabelings);
                covered += orbit.orbit_size;
            }
            EXPECT_EQ(covered, fixtures::all_complete(n, rules).size());
        }
}

TEST(BruteForce, RepresentativesAreExactlyTheCanonicalMembers)
{
    for (const auto& rules : {RuleSet::all(), fixtures::kMixed}) {
        auto report = oracle::brute_force_classes(4, rules);
        auto canon = report.canonicals();
        for (const auto& a : fixtures::all_complete(4, rules)) {
            const bool listed = std::binary_search(canon.begin(), canon.end(), a);
            EXPECT_EQ(is_canonical_complete(a, rules), listed) << to_code_string(a);
        }
    }
}

TEST(Relabel, AgreesWithEngineAction)
{
    std::vector<int> images{0, 1, 2, 3, 4, 5};
    std::mt19937 rng(1);
    do {
        std::vector<Alternative> g(images.begin() + 1, images.end());
        auto a = fixtures::random_complete(5, RuleSet::all(), rng);
        auto mine = oracle::relabel({encode(a).begin(), encode(a).end()}, 5, images);
        auto engine = transform(a, Permutation(g), RuleSet::all());
        EXPECT_EQ(engine.has_value(), oracle::within(mine, RuleSet::all()));
        if (engine) EXPECT_EQ(mine, std::vector<Code>(encode(*engine).begin(), encode(*engine).end()));
    } while (std::next_permutation(images.begin() + 1, images.end()));
}

TEST(CrossCheck, SmallCases)
{
    auto run = [](int n, const RuleSet& rules) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.rules = rules;
        return oracle::cross_check(n, rules, false, [&] { return generate_all(cfg); });
    };
    auto v = run(3, RuleSet::all());
    EXPECT_TRUE(v.equal);
    EXPECT_EQ(v.oracle_count, 3u);
    EXPECT_EQ(v.generator_count, 3u);
    for (const auto& rules : fixtures::studied_rule_sets()) EXPECT_TRUE(run(4, rules).equal) << rules.tokens();
    EXPECT_TRUE(run(4, RuleSet::all()).equal);
}

TEST(CrossCheck, ReportsDifferences)
{
    auto v = oracle::cross_check(3, RuleSet::all(), false,
                                 [] { return std::vector<ConditionAssignment>{decode("2", 3), decode("4", 3)}; });
    EXPECT_FALSE(v.equal);
    EXPECT_EQ(fixtures::code_strings(v.only_in_oracle), (std::vector<std::string>{"5", "6"}));
    EXPECT_EQ(fixtures::code_strings(v.only_in_generator), std::vector<std::string>{"2"});
}

TEST(ExpandByFilter, GuardsSize)
{
    EXPECT_THROW(oracle::expand_by_filter(ConditionAssignment(10, std::vector<Code>(120, 4))), PreconditionError);
}
