#include <gtest/gtest.h>

#include "compschur/lr.hpp"
#include "compschur/oracle.hpp"

using namespace compschur;
using namespace compschur::oracle;

namespace {

// ν/λ is a horizontal strip iff no column gains more than one box.
bool is_horizontal_strip(const Partition& nu, const Partition& lambda) {
    if (!contains(lambda, nu)) return false;
    const Partition a = conjugate(nu), b = conjugate(lambda);
    for (int j = 0; j < a.length(); ++j)
        if (a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)] > 1) return false;
    return true;
}

SchurExpansion pieri_brute(const Partition& lambda, int k) {
    SchurExpansion e;
    for (const auto& nu : partitions_of(lambda.size() + k))
        if (is_horizontal_strip(nu, lambda)) e.add(nu, 1);
    return e;
}

}  // namespace

TEST(Oracle, PartitionsOf) {
    EXPECT_EQ(partitions_of(0), std::vector<Partition>{Partition{}});
    EXPECT_EQ(partitions_of(4), (std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                                      Partition({2, 1, 1}), Partition({1, 1, 1, 1})}));
    EXPECT_EQ(partitions_of(10).size(), 42U);
}

TEST(Oracle, PieriRow) {
    SchurExpansion want;
    for (auto p : {Partition({4}), Partition({3, 1}), Partition({2, 2})}) want.add(p, 1);
    EXPECT_EQ(pieri_row(Partition({2}), 2), want);
    EXPECT_EQ(pieri_row(Partition({2}), 2), product_expansion(Partition({2}), Partition({2})));
    EXPECT_EQ(pieri_row(Partition({3, 1}), 0), SchurExpansion::single(Partition({3, 1})));

    SchurExpansion one_one;
    one_one.add(Partition({2, 1}), 1);
    one_one.add(Partition({1, 1, 1}), 1);
    EXPECT_EQ(pieri_row(Partition({1, 1}), 1), one_one);

    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 0; k <= 4; ++k) EXPECT_EQ(pieri_row(lambda, k), pieri_brute(lambda, k));
}

TEST(Oracle, Kostka) {
    EXPECT_EQ(kostka(Partition({2, 1}), Partition({1, 1, 1})), 2);
    EXPECT_EQ(kostka(Partition({1, 1}), Partition({2})), 0);
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : partitions_of(n)) EXPECT_EQ(kostka(mu, mu), 1);
    EXPECT_THROW(kostka(Partition({2}), Partition({1})), std::invalid_argument);
    // K_{λ,1^n} counts standard tableaux.
    for (const auto& lambda : partitions_of(6))
        EXPECT_EQ(kostka(lambda, Partition(std::vector<int>(6, 1))), syt_count(lambda));
}

TEST(Oracle, KostkaUnitriangularAndInverse) {
    for (int n = 0; n <= 9; ++n) {
        const auto m = KostkaMatrix::build(n);
        const auto inv = m.inverse();
        const std::size_t size = m.index.size();
        for (std::size_t i = 0; i < size; ++i) {
            EXPECT_EQ(m.entries[i][i], 1);
            for (std::size_t j = 0; j < size; ++j) {
                EXPECT_GE(m.entries[i][j], 0);
                if (m.entries[i][j] != 0) {
                    EXPECT_TRUE(dominates(m.index[i], m.index[j]));
                }
                BigInt dot = 0;
                for (std::size_t k = 0; k < size; ++k) dot += m.entries[i][k] * inv[k][j];
                EXPECT_EQ(dot, i == j ? 1 : 0);
            }
        }
    }
}

TEST(Oracle, ProductExamples) {
    SchurExpansion want;
    want.add(Partition({3, 1}), 1);
    want.add(Partition({2, 1, 1}), 1);
    EXPECT_EQ(product_expansion_oracle(Partition({2}), Partition({1, 1})), want);
    EXPECT_EQ(product_expansion_oracle(Partition({3, 2}), Partition{}), SchurExpansion::single(Partition({3, 2})));

    SchurExpansion line3;
    for (auto p : {Partition({2, 2}), Partition({3, 1}), Partition({2, 1, 1})}) line3.add(p, 1);
    EXPECT_EQ(product_expansion_oracle(Partition({2, 1}), Partition({1})), line3);
}

TEST(Oracle, AgreesWithLrEngineUpToDegreeTen) {
    for (int n = 0; n <= 10; ++n)
        for (int k = 0; n + k <= 10; ++k)
            for (const auto& lambda : partitions_of(n))
                for (const auto& mu : partitions_of(k))
                    ASSERT_EQ(product_expansion_oracle(lambda, mu), product_expansion(lambda, mu))
                        << lambda.to_string() << " * " << mu.to_string();
}

TEST(Oracle, SytCount) {
    EXPECT_EQ(syt_count(Partition({2, 2})), 2);
    EXPECT_EQ(syt_count(Partition({2, 1})), 2);
    EXPECT_EQ(syt_count(Partition({7})), 1);
    EXPECT_EQ(syt_count(Partition{}), 1);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) EXPECT_EQ(syt_count(lambda), syt_count_by_enumeration(lambda));
}
