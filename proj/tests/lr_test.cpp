#include <gtest/gtest.h>

#include "compschur/lr.hpp"
#include "compschur/oracle.hpp"

using namespace compschur;

namespace {

SchurExpansion expansion(std::initializer_list<std::pair<Partition, int>> terms) {
    SchurExpansion e;
    for (const auto& [nu, c] : terms) e.add(nu, c);
    return e;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : oracle::partitions_of(k)) out.push_back(p);
    return out;
}

}  // namespace

TEST(ProductExpansion, TwoByTwoProducts) {
    EXPECT_EQ(product_expansion(Partition({2}), Partition({2})),
              expansion({{Partition({2, 2}), 1}, {Partition({3, 1}), 1}, {Partition({4}), 1}}));
    EXPECT_EQ(product_expansion(Partition({1, 1}), Partition({1, 1})),
              expansion({{Partition({2, 2}), 1}, {Partition({2, 1, 1}), 1}, {Partition({1, 1, 1, 1}), 1}}));
    EXPECT_EQ(product_expansion(Partition({2, 1}), Partition({1})),
              expansion({{Partition({2, 2}), 1}, {Partition({3, 1}), 1}, {Partition({2, 1, 1}), 1}}));
    EXPECT_EQ(product_expansion(Partition({2, 2}), Partition{}), SchurExpansion::single(Partition({2, 2})));
}

TEST(ProductExpansion, Identity) {
    for (const auto& lambda : partitions_up_to(5)) {
        EXPECT_EQ(product_expansion(lambda, Partition{}), SchurExpansion::single(lambda));
        EXPECT_EQ(product_expansion(Partition{}, lambda), SchurExpansion::single(lambda));
    }
}

TEST(ProductExpansion, TwoRows) {
    EXPECT_EQ(product_expansion(Partition({3}), Partition({3})),
              expansion({{Partition({6}), 1}, {Partition({5, 1}), 1}, {Partition({4, 2}), 1}, {Partition({3, 3}), 1}}));
    for (int j = 0; j <= 6; ++j)
        for (int k = 0; k <= 6; ++k) {
            SchurExpansion want;
            for (int i = 0; i <= std::min(j, k); ++i) want.add(Partition({j + k - i, i}), 1);
            EXPECT_EQ(product_expansion(Partition({j}), Partition({k})), want);
        }
}

TEST(ProductExpansion, NonUnitCoefficient) {
    // s_21 · s_21 has s_321 with coefficient 2.
    EXPECT_EQ(product_expansion(Partition({2, 1}), Partition({2, 1})).coefficient(Partition({3, 2, 1})), 2);
}

TEST(LrCoefficient, Examples) {
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition({2}), Partition({3, 1})), 1);
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition({2}), Partition({2, 1, 1})), 0);
    EXPECT_EQ(lr_coefficient(Partition({2}), Partition({2}), Partition({5})), 0);
    for (const auto& lambda : partitions_up_to(4)) EXPECT_EQ(lr_coefficient(lambda, Partition{}, lambda), 1);
}

TEST(LrCoefficient, MatchesProductExpansion) {
    const auto all = partitions_up_to(5);
    for (const auto& lambda : all)
        for (const auto& mu : all) {
            if (lambda.size() + mu.size() > 8) continue;
            const auto product = product_expansion(lambda, mu);
            for (const auto& nu : oracle::partitions_of(lambda.size() + mu.size()))
                EXPECT_EQ(lr_coefficient(lambda, mu, nu), product.coefficient(nu));
        }
}

TEST(CountLrTableaux, Examples) {
    // s_2 · s_2 contains s_22 once: the second row filled 1 1.
    EXPECT_EQ(count_lr_tableaux(SkewShape(Partition({2, 2}), Partition({2})), Partition({2})), 1);
    // Two boxes stacked in one column cannot both hold 1.
    EXPECT_EQ(count_lr_tableaux(SkewShape(Partition({2, 2}), Partition({1, 1})), Partition({2})), 0);
    EXPECT_EQ(count_lr_tableaux(SkewShape(Partition({3, 1}), Partition({3, 1})), Partition{}), 1);
    EXPECT_GE(count_lr_tableaux(SkewShape(Partition({8, 5, 2, 2, 2, 1, 1}), Partition({5, 4, 1, 1})),
                                Partition({3, 3, 2, 2})),
              1);
}

TEST(CountLrTableaux, EnumeratedFillingsAreValid) {
    const SkewShape shape(Partition({4, 3, 2, 1}), Partition({2, 1}));
    for (const auto& content : oracle::partitions_of(shape.size())) {
        BigInt seen = 0;
        for_each_lr_tableau(shape, content, [&](const LRTableau& t) {
            EXPECT_TRUE(is_lr_tableau(t)) << lr_tableau_violation(t);
            EXPECT_EQ(t.content(), content.parts());
            ++seen;
        });
        EXPECT_EQ(seen, count_lr_tableaux(shape, content));
    }
}

TEST(LrTableau, Validation) {
    LRTableau good{Partition({4}), Partition({2}), {{}, }};
    good.rows = {{1, 1}};
    EXPECT_TRUE(is_lr_tableau(good));

    LRTableau not_lattice{Partition({3, 1}), Partition({1}), {{2, 2}, {1}}};
    EXPECT_EQ(lr_tableau_violation(not_lattice), "reading word is not a lattice word");

    LRTableau column{Partition({2, 2}), Partition({1}), {{1}, {1, 1}}};
    EXPECT_NE(lr_tableau_violation(column).find("column"), std::string::npos);

    LRTableau row{Partition({3}), Partition{}, {{2, 1, 1}}};
    EXPECT_NE(lr_tableau_violation(row).find("decreases"), std::string::npos);
}

TEST(SkewExpansion, Examples) {
    EXPECT_EQ(skew_expansion(Partition({2, 1}), Partition({1})),
              expansion({{Partition({2}), 1}, {Partition({1, 1}), 1}}));
    EXPECT_EQ(skew_expansion(Partition({3, 2}), Partition({3, 2})), SchurExpansion::single(Partition{}));
    EXPECT_EQ(skew_expansion(Partition({2, 2}), Partition({2})), SchurExpansion::single(Partition({2})));
    EXPECT_THROW(skew_expansion(Partition({2}), Partition({1, 1})), std::invalid_argument);
}

TEST(SkewExpansion, ConsistentWithCoefficients) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const Rectangle rect(a, b);
            const Partition outer = rect.as_partition();
            for (const auto& lambda : enumerate_subpartitions(rect)) {
                const auto skew = skew_expansion(outer, lambda);
                for (const auto& nu : oracle::partitions_of(outer.size() - lambda.size()))
                    EXPECT_EQ(skew.coefficient(nu), lr_coefficient(lambda, nu, outer));
                // For a rectangle the skew function is a single Schur function.
                EXPECT_EQ(skew, SchurExpansion::single(complement(lambda, rect)));
            }
        }
}

TEST(ProductExpansion, SymmetryGradingBounding) {
    const auto all = partitions_up_to(6);
    for (const auto& lambda : all)
        for (const auto& mu : all) {
            const auto product = product_expansion(lambda, mu);
            EXPECT_EQ(product, product_expansion(mu, lambda));
            for (const auto& [nu, c] : product.terms()) {
                EXPECT_EQ(nu.size(), lambda.size() + mu.size());
                EXPECT_TRUE(contains(lambda, nu));
                EXPECT_TRUE(contains(mu, nu));
                EXPECT_LE(nu[0], lambda[0] + mu[0]);
            }
        }
}

TEST(ProductExpansion, DimensionChecksum) {
    const auto all = partitions_up_to(6);
    for (const auto& lambda : all)
        for (const auto& mu : all) {
            BigInt lhs = 0;
            for (const auto& [nu, c] : product_expansion(lambda, mu)) lhs += c * oracle::syt_count(nu);
            const BigInt rhs = oracle::syt_count(lambda) * oracle::syt_count(mu) *
                               BigInt(binomial(lambda.size() + mu.size(), lambda.size()));
            EXPECT_EQ(lhs, rhs) << lambda.to_string() << " * " << mu.to_string();
        }
}
