#include "qgenus/fp_linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qgenus;

namespace {

fp::Mat random_mat(std::mt19937_64& rng, int r, int c, int p)
{
    std::uniform_int_distribution<int> d(0, p - 1);
    fp::Mat m(r, fp::Vec(c));
    for (auto& row : m)
        for (auto& x : row) x = d(rng);
    return m;
}

}  // namespace

TEST(FpLinalg, RankNullity)
{
    std::mt19937_64 rng(11);
    for (int p : {3, 5, 7}) {
        for (int it = 0; it < 200; ++it) {
            const int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
            const fp::Mat m = random_mat(rng, r, c, p);
            const fp::Mat k = fp::kernel(m, c, p);
            EXPECT_EQ(fp::rank(m, p) + static_cast<int>(k.size()), c);
            for (const auto& v : k) {
                const fp::Vec mv = fp::mul(m, v, p);
                for (int x : mv) EXPECT_EQ(x, 0);
            }
        }
    }
}

TEST(FpLinalg, InverseAndIdentity)
{
    std::mt19937_64 rng(12);
    int tried = 0;
    while (tried < 100) {
        const fp::Mat m = random_mat(rng, 4, 4, 5);
        if (fp::rank(m, 5) < 4) continue;
        ++tried;
        EXPECT_EQ(fp::multiply(m, fp::invert(m, 5), 5), fp::identity(4));
    }
    for (int a = 1; a < 7; ++a) EXPECT_EQ(a * fp::inverse(a, 7) % 7, 1);
}

TEST(FpLinalg, IntersectionDimension)
{
    std::mt19937_64 rng(13);
    for (int it = 0; it < 200; ++it) {
        const fp::Mat a = random_mat(rng, 3, 5, 5), b = random_mat(rng, 3, 5, 5);
        fp::Mat both = a;
        both.insert(both.end(), b.begin(), b.end());
        const int inter = fp::span_dim(fp::intersect(a, b, 5, 5), 5);
        EXPECT_EQ(fp::rank(a, 5) + fp::rank(b, 5) - fp::rank(both, 5), inter);
        for (const auto& v : fp::intersect(a, b, 5, 5)) {
            EXPECT_TRUE(fp::in_span(a, v, 5));
            EXPECT_TRUE(fp::in_span(b, v, 5));
        }
    }
}

TEST(FpLinalg, IndependentSetTracksSpan)
{
    fp::IndependentSet s(3, 5);
    EXPECT_TRUE(s.add({1, 0, 0}));
    EXPECT_FALSE(s.add({2, 0, 0}));
    EXPECT_TRUE(s.add({1, 1, 0}));
    EXPECT_TRUE(s.contains({0, 3, 0}));
    EXPECT_FALSE(s.contains({0, 0, 1}));
    EXPECT_EQ(s.size(), 2);
}
