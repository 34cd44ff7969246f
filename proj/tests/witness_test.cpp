#include <gtest/gtest.h>

#include "compschur/witness.hpp"

using namespace compschur;

TEST(WordToSelfComplementary, Examples) {
    const auto p = word_to_selfcomplementary(Word("hvvhv"), Rectangle(4, 6));
    EXPECT_EQ(p.lambda, Partition({6, 4, 2}));
    EXPECT_EQ(p.lambda_c, Partition({6, 4, 2}));
    EXPECT_EQ(word_to_selfcomplementary(Word("hv"), Rectangle(2, 2)).lambda, Partition({2}));
    const auto centre = word_to_selfcomplementary(Word(""), Rectangle(1, 1));
    EXPECT_EQ(centre.lambda, Partition({1}));
    EXPECT_EQ(centre.lambda_c, Partition{});
    EXPECT_THROW(word_to_selfcomplementary(Word("hh"), Rectangle(2, 2)), std::invalid_argument);
    EXPECT_THROW(word_to_selfcomplementary(Word("hv"), Rectangle(4, 6)), std::invalid_argument);
}

TEST(WordToSelfComplementary, BijectionAllParities) {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            const Rectangle rect(a, b);
            std::set<Partition> images;
            for (const auto& w : Word::all(a / 2, b / 2)) {
                const auto pair = word_to_selfcomplementary(w, rect);
                EXPECT_TRUE(is_theorem_pair(pair.lambda, rect));
                EXPECT_EQ(selfcomplementary_to_word(pair.lambda, rect), w);
                EXPECT_EQ(selfcomplementary_to_word(pair.lambda_c, rect), w);
                images.insert(pair.lambda);
            }
            std::size_t theorem_pairs = 0;
            for (const auto& pair : complementary_pairs(rect)) theorem_pairs += is_theorem_pair(pair.lambda, rect);
            EXPECT_EQ(images.size(), binomial(a / 2 + b / 2, a / 2)) << rect.to_string();
            EXPECT_EQ(theorem_pairs, images.size()) << rect.to_string();
        }
}

TEST(VerifyWitness, Examples) {
    const Rectangle rect(2, 2);
    const auto square = ComplementaryPair::of(Partition({2}), rect);
    EXPECT_TRUE(verify_witness(Partition({4}), square, rect));
    EXPECT_FALSE(verify_witness(Partition({2, 2}), square, rect));
    EXPECT_FALSE(verify_witness(Partition({3, 1}), square, rect));
    EXPECT_FALSE(verify_witness(Partition({1, 1, 1, 1}), square, rect));
}

TEST(TheoremWitness, Examples) {
    EXPECT_EQ(theorem_witness(Partition({2}), Rectangle(2, 2)).witness, Partition({4}));
    EXPECT_EQ(theorem_witness(Partition({1, 1}), Rectangle(2, 2)).witness, Partition({1, 1, 1, 1}));
    EXPECT_EQ(theorem_witness(Partition({3}), Rectangle(1, 6)).witness, Partition({3, 3}));
    const auto odd = theorem_witness(Partition({2}), Rectangle(1, 3));
    EXPECT_EQ(odd.witness, Partition({2, 1}));
    EXPECT_EQ(odd.pair.lambda_c, Partition({1}));
    EXPECT_EQ(theorem_witness(Partition({1}), Rectangle(2, 1)).witness, Partition({2}));
    EXPECT_EQ(theorem_witness(Partition({2}), Rectangle(2, 2)).method, WitnessMethod::EvenEvenLemma);
    EXPECT_EQ(odd.method, WitnessMethod::OddGreedy);
    EXPECT_THROW(theorem_witness(Partition({2, 1}), Rectangle(2, 2)), std::invalid_argument);
}

TEST(TheoremWitness, AllRectanglesUpToFive) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const Rectangle rect(a, b);
            for (const auto& pair : complementary_pairs(rect)) {
                if (!is_theorem_pair(pair.lambda, rect)) continue;
                const auto cert = theorem_witness(pair.lambda, rect);
                EXPECT_TRUE(verify_witness(cert.witness, cert.pair, rect));
                EXPECT_EQ(cert.pair, pair);
                if (cert.coefficient != 1)
                    ADD_FAILURE() << "coefficient " << cert.coefficient << " for " << pair.lambda.to_string();
            }
        }
}

TEST(TwoRowWitness, Examples) {
    EXPECT_EQ(two_row_witness(Partition({3, 2}), 4).witness, Partition({4, 2, 1, 1}));
    for (int b = 1; b <= 6; ++b) EXPECT_EQ(two_row_witness(Partition({b, b}), b).witness, Partition({b, b}));
    const auto sc = two_row_witness(Partition({2, 2}), 4);
    EXPECT_EQ(sc.witness, Partition({2, 2, 2, 2}));
    EXPECT_EQ(sc.witness, theorem_witness(Partition({2, 2}), Rectangle(2, 4)).witness);
    EXPECT_THROW(two_row_witness(Partition({1, 1}), 4), std::invalid_argument);
    EXPECT_THROW(two_row_witness(Partition({5}), 4), std::invalid_argument);
    EXPECT_THROW(two_row_witness(Partition({1, 1, 1}), 4), std::invalid_argument);
}

TEST(TwoRowWitness, AllUpToSix) {
    for (int b = 1; b <= 6; ++b)
        for (const auto& pair : complementary_pairs(Rectangle(2, b))) {
            const auto cert = two_row_witness(pair.lambda, b);
            EXPECT_EQ(cert.coefficient, 1);
            EXPECT_FALSE(cert.exclusive_over_all_pairs);
        }
}

TEST(Bootstrap, Examples) {
    const auto base = bootstrap_witness_row_base(3);
    EXPECT_EQ(base.witness, Partition({6}));
    EXPECT_EQ(base.pair.lambda, Partition({3}));
    EXPECT_EQ(base.pair.lambda_c, Partition({3}));

    const auto two = theorem_witness(Partition({2}), Rectangle(2, 2));
    const auto lifted = bootstrap_witness_row(two, 2);
    EXPECT_EQ(lifted.rect, Rectangle(4, 2));
    EXPECT_EQ(lifted.pair.lambda, Partition({2, 2}));
    EXPECT_EQ(lifted.witness, Partition({4, 4}));

    const auto odd = theorem_witness(Partition({2}), Rectangle(1, 3));
    const auto lifted_odd = bootstrap_witness_row(odd, 3);
    EXPECT_EQ(lifted_odd.pair.lambda, Partition({3, 2}));
    EXPECT_EQ(lifted_odd.pair.lambda_c, Partition({3, 1}));
    EXPECT_EQ(lifted_odd.witness, Partition({6, 2, 1}));
    EXPECT_EQ(complementary_pairs(Rectangle(3, 3)).size(), 10U);

    EXPECT_THROW(bootstrap_witness_row(two, 3), std::invalid_argument);
    EXPECT_THROW(bootstrap_witness_row(two_row_witness(Partition({3, 2}), 4), 4), std::invalid_argument);

    const auto col = bootstrap_witness_col(two, 2);
    EXPECT_EQ(col.rect, Rectangle(2, 4));
    EXPECT_EQ(col.pair.lambda, Partition({3, 1}));
    EXPECT_EQ(col.witness, Partition({5, 1, 1, 1}));
    EXPECT_EQ(col.witness, two_row_witness(Partition({3, 1}), 4).witness);
    EXPECT_EQ(col.method, WitnessMethod::ColumnBootstrap);
    EXPECT_EQ(bootstrap_witness_col_base(3).witness, Partition({1, 1, 1, 1, 1, 1}));
}

TEST(Bootstrap, AgreesWithTheoremWitness) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            const Rectangle rect(a, b);
            for (const auto& pair : complementary_pairs(rect)) {
                if (!is_theorem_pair(pair.lambda, rect)) continue;
                const auto direct = theorem_witness(pair.lambda, rect);
                const auto induced = induction_witness(pair.lambda, rect);
                ASSERT_TRUE(induced.has_value());
                EXPECT_EQ(induced->witness, direct.witness);
                if (a >= 2 && pair.lambda[0] == b && pair.lambda_c[0] == b) {
                    const auto lifted = a == 2 ? bootstrap_witness_row_base(b)
                                               : bootstrap_witness_row(
                                                     theorem_witness(Partition(std::vector<int>(
                                                                         pair.lambda.parts().begin() + 1,
                                                                         pair.lambda.parts().end())),
                                                                     Rectangle(a - 2, b)),
                                                     b);
                    EXPECT_EQ(lifted.witness, direct.witness) << pair.lambda.to_string() << " in " << rect.to_string();
                }
            }
        }
}
