#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <condorcet/condorcet.hpp>

using namespace condorcet;

TEST(ConditionsFile, HeaderAndBody)
{
    auto rules = RuleSet::parse("2N3,2N1");
    EXPECT_EQ(io::conditions_header(8, rules), "# n=8 rules=2N1,2N3 order=colex codes=1N2:1,1N3:2,2N1:3,2N3:4,3N1:5,3N2:6");
    std::istringstream in(io::conditions_header(4, rules) + "\n4334\n\n4443\r\n");
    auto file = io::read_conditions(in);
    EXPECT_EQ(file.n, 4);
    ASSERT_TRUE(file.rules);
    EXPECT_EQ(*file.rules, rules);
    ASSERT_EQ(file.assignments.size(), 2u);
    EXPECT_EQ(to_code_string(file.assignments[1]), "4443");
}

TEST(ConditionsFile, InfersAlternativesFromLength)
{
    std::istringstream in("4\n5\n");
    auto file = io::read_conditions(in);
    EXPECT_EQ(file.n, 3);
    EXPECT_EQ(file.assignments.size(), 2u);
    std::istringstream odd("44\n");
    EXPECT_THROW(io::read_conditions(odd), io::FormatError);
}

TEST(ConditionsFile, RejectsForeignConventions)
{
    std::istringstream lex("# n=4 order=lex\n4444\n");
    EXPECT_THROW(io::read_conditions(lex), io::FormatError);
    std::istringstream codes("# n=4 codes=2N3:1\n4444\n");
    EXPECT_THROW(io::read_conditions(codes), io::FormatError);
    std::istringstream digits("# n=4\n4449\n");
    EXPECT_THROW(io::read_conditions(digits), io::FormatError);
}

TEST(HistogramFile, AscendingSizeCountLines)
{
    SizeHistogram h;
    h.add(59, 31);
    h.add(44, 7);
    std::ostringstream out;
    io::write_histogram(out, h);
    EXPECT_EQ(out.str(), "44: 7\n59: 31\n");
    std::istringstream in(out.str());
    EXPECT_EQ(io::read_histogram(in), h);
}

TEST(DomainFile, DigitsAndCommas)
{
    std::ostringstream out;
    io::write_domain(out, expand(decode("4", 3)), decode("4", 3));
    EXPECT_EQ(out.str(), "# n=3 source=4 size=4\n123\n213\n231\n321\n");

    ConditionAssignment big(10, std::vector<Code>(120, 4));
    std::ostringstream wide;
    io::write_domain(wide, Domain(10, {LinearOrder::standard(10)}), big);
    EXPECT_NE(wide.str().find("\n1,2,3,4,5,6,7,8,9,10\n"), std::string::npos);

    std::istringstream in(out.str() + wide.str());
    auto domains = io::read_domains(in);
    ASSERT_EQ(domains.size(), 2u);
    EXPECT_EQ(domains[0], expand(decode("4", 3)));
    EXPECT_EQ(domains[1].alternatives(), 10);
}

TEST(Manifest, ChecksumVerifies)
{
    auto dir = std::filesystem::temp_directory_path() / "condorcet_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.txt").string();
    {
        std::ofstream f(path);
        f << "4\n5\n6\n";
    }
    // crc32 of the bytes "4\n5\n6\n" as zlib computes it
    io::Manifest m;
    m.set("output_crc32", io::hex32(io::file_crc32(path)));
    m.set("n", "3");
    {
        std::ofstream f(io::manifest_path(path));
        m.write(f);
    }
    EXPECT_TRUE(io::verify_manifest(path));
    std::ifstream back(io::manifest_path(path));
    EXPECT_EQ(io::Manifest::read(back).get("n"), "3");
    {
        std::ofstream f(path, std::ios::app);
        f << "7\n";
    }
    EXPECT_FALSE(io::verify_manifest(path));
    std::filesystem::remove_all(dir);
}

TEST(Manifest, KnownChecksum)
{
    auto path = (std::filesystem::temp_directory_path() / "condorcet_crc.txt").string();
    {
        std::ofstream f(path, std::ios::binary);
        f << "123456789";
    }
    EXPECT_EQ(io::hex32(io::file_crc32(path)), "cbf43926");
    std::filesystem::remove(path);
}
