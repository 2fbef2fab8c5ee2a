#include "qgenus/errors.hpp"
#include "qgenus/fixtures.hpp"

#include <gtest/gtest.h>

using namespace qgenus;

TEST(Fixtures, Checksums)
{
    const std::map<int, std::string> expected = {
        {1, "c17f30705da2ae816174eb1fef119c76a39954b816dfcb1a924ffbcda936290f"},
        {2, "3ee8a969bbd56d1aa66830658174d5243d4a09597cf81643bab58667e33daf7c"},
        {3, "c631c00785f22c27ddbb517cceeddec81b57b65d7f563ffb1a1d2711e8e0382a"},
        {4, "746d832e48f5492f5f46b9c28b34c5e1d0df4cde304a602fdb61ec384cf25042"},
    };
    for (const auto& [id, sum] : expected) EXPECT_EQ(load_table(id).sha256, sum) << id;
}

TEST(Fixtures, RowCounts)
{
    EXPECT_EQ(load_table(1).rows.size(), 97u);
    EXPECT_EQ(load_table(2).rows.size(), 14u);
    EXPECT_EQ(load_table(3).rows.size(), 11u);
    EXPECT_EQ(load_table(4).rows.size(), 50u);
}

TEST(Fixtures, ClassGroupsArePowersOfFive)
{
    for (int id = 1; id <= 4; ++id)
        for (const auto& row : load_table(id).rows)
            for (int c : row.class_group) {
                int v = c;
                while (v % 5 == 0) v /= 5;
                EXPECT_EQ(v, 1) << row.key();
            }
}

TEST(Fixtures, SuspectedTypoIsFlagged)
{
    int flagged = 0;
    for (const auto& row : load_table(1).rows)
        if (row.nf_suspected_typo) {
            ++flagged;
            EXPECT_EQ(row.n, 55);
        }
    EXPECT_EQ(flagged, 1);
}

TEST(Fixtures, SpecificRows)
{
    for (const auto& row : load_table(2).rows)
        if (row.n == 139) {
            EXPECT_EQ(row.rank(), 3);
            EXPECT_EQ(parse_module_shape(row.module_shape), std::vector<int>{3});
        }
    for (const auto& row : load_table(3).rows) {
        EXPECT_EQ(row.factors.size(), 2u);
        EXPECT_EQ(row.n, row.factors[0] * row.factors[1]);
    }
}

TEST(Fixtures, Parsers)
{
    EXPECT_TRUE(parse_class_group("1").empty());
    EXPECT_EQ(parse_class_group("5x5"), (std::vector<int>{5, 5}));
    EXPECT_EQ(parse_class_group("25"), (std::vector<int>{25}));
    EXPECT_THROW(parse_class_group("6"), invalid_input);
    EXPECT_EQ(parse_module_shape("R/l x R/l^3"), (std::vector<int>{1, 3}));
    EXPECT_EQ(parse_module_shape("R/l^2"), (std::vector<int>{2}));
    EXPECT_THROW(parse_table(2, "bogus\theader\n"), invalid_input);
    EXPECT_THROW(load_table(9), invalid_input);
}

TEST(Fixtures, Sha256KnownAnswer)
{
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
