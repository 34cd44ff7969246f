#pragma once

// Witnesses: partitions π such that s_π occurs in exactly one product
// s_μ s_μᶜ over a rectangle. Every certificate produced here is checked
// against all complementary pairs before it is returned.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "compschur/lr.hpp"
#include "compschur/parallel.hpp"
#include "compschur/partition.hpp"
#include "compschur/word.hpp"

namespace compschur {

enum class WitnessMethod { EvenEvenLemma, OddGreedy, TwoRowFormula, RowBootstrap, ColumnBootstrap, Search };

inline std::string to_string(WitnessMethod m) {
    switch (m) {
        case WitnessMethod::EvenEvenLemma: return "even-even-lemma";
        case WitnessMethod::OddGreedy: return "odd-greedy";
        case WitnessMethod::TwoRowFormula: return "two-row-formula";
        case WitnessMethod::RowBootstrap: return "row-bootstrap";
        case WitnessMethod::ColumnBootstrap: return "column-bootstrap";
        case WitnessMethod::Search: return "search";
    }
    return "unknown";
}

/// Thrown when a constructed witness fails its exclusivity check. For the
/// theorem's witnesses this means a bug, not a mathematical finding.
class CertificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct WitnessCertificate {
    Rectangle rect;
    ComplementaryPair pair;
    Partition witness;
    BigInt coefficient;
    WitnessMethod method = WitnessMethod::EvenEvenLemma;
    /// False only for two-row certificates, which are exclusive among the
    /// pairs at or after theirs in the λ1+λ2 order.
    bool exclusive_over_all_pairs = true;
};

/// Pairs in `pool` other than `own` whose product contains s_π.
inline std::vector<ComplementaryPair> pairs_containing(const Partition& pi, const ComplementaryPair& own,
                                                       const std::vector<ComplementaryPair>& pool, int jobs = 1) {
    std::vector<char> hit(pool.size(), 0);
    parallel_for(pool.size(), jobs, [&](std::size_t i) {
        if (pool[i] == own) return;
        hit[i] = lr_coefficient(pool[i].lambda, pool[i].lambda_c, pi) != 0;
    });
    std::vector<ComplementaryPair> out;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (hit[i]) out.push_back(pool[i]);
    return out;
}

/// True iff s_π occurs in s_λ s_λᶜ for the given pair and in no other
/// complementary product over `rect`.
inline bool verify_witness(const Partition& pi, const ComplementaryPair& pair, const Rectangle& rect, int jobs = 1) {
    if (lr_coefficient(pair.lambda, pair.lambda_c, pi) == 0) return false;
    return pairs_containing(pi, pair, complementary_pairs(rect), jobs).empty();
}

namespace detail {

inline void require_signature(const Word& w, const Rectangle& rect) {
    if (w.h_count() != rect.rows / 2 || w.v_count() != rect.cols / 2)
        throw std::invalid_argument("word " + w.str() + " needs " + std::to_string(rect.rows / 2) + " h's and " +
                                    std::to_string(rect.cols / 2) + " v's for " + rect.to_string());
}

inline WitnessCertificate certify(const Rectangle& rect, const ComplementaryPair& pair, const Partition& pi,
                                  WitnessMethod method, int jobs) {
    const BigInt coeff = lr_coefficient(pair.lambda, pair.lambda_c, pi);
    if (coeff == 0)
        throw CertificationError("witness " + pi.to_string() + " does not occur in s_" + pair.lambda.to_string() +
                                 " s_" + pair.lambda_c.to_string());
    const auto others = pairs_containing(pi, pair, complementary_pairs(rect), jobs);
    if (!others.empty())
        throw CertificationError("witness " + pi.to_string() + " for " + pair.lambda.to_string() + "|" +
                                 pair.lambda_c.to_string() + " in " + rect.to_string() + " also occurs in s_" +
                                 others.front().lambda.to_string() + " s_" + others.front().lambda_c.to_string());
    return {rect, pair, pi, coeff, method, true};
}

}  // namespace detail

/// Greedy construction: each h gives the current top row to λ and the
/// current bottom row to λᶜ, each v gives the current left column to λ and
/// the right column to λᶜ. The word must have ⌊a/2⌋ h's and ⌊b/2⌋ v's.
/// Returns {λ, λ} when some side is even; for odd×odd the central box is
/// left over and the result is the pair {λ + centre, λ}.
inline ComplementaryPair word_to_selfcomplementary(const Word& w, const Rectangle& rect) {
    detail::require_signature(w, rect);
    std::vector<int> rows(static_cast<std::size_t>(rect.rows), 0);
    int top = 0, bottom = rect.rows - 1, left = 0, right = rect.cols - 1;
    for (char letter : w.str()) {
        if (letter == 'h') {
            if (top <= bottom && left <= right) rows[static_cast<std::size_t>(top)] = right + 1;
            ++top;
            --bottom;
        } else {
            if (top <= bottom && left <= right)
                for (int r = top; r <= bottom; ++r) rows[static_cast<std::size_t>(r)] = std::max(rows[static_cast<std::size_t>(r)], left + 1);
            ++left;
            --right;
        }
    }
    const Partition lambda(rows);
    if (!rect.both_odd()) {
        if (!is_self_complementary(lambda, rect))
            throw std::logic_error("greedy assignment did not produce a self-complementary partition");
        return {lambda, lambda};
    }
    std::vector<int> with_centre = lambda.parts();
    if (with_centre.size() <= static_cast<std::size_t>(rect.rows / 2))
        with_centre.resize(static_cast<std::size_t>(rect.rows / 2 + 1), 0);
    with_centre[static_cast<std::size_t>(rect.rows / 2)] += 1;
    Partition big(with_centre);
    if (complement(big, rect) != lambda)
        throw std::logic_error("greedy assignment did not produce an almost self-complementary pair");
    return {std::move(big), lambda};
}

/// Reads the λ/λᶜ boundary from the upper-right corner of the rectangle:
/// a vertical step is h, a horizontal step is v; stops after ⌊a/2⌋+⌊b/2⌋ steps.
inline Word selfcomplementary_to_word(const Partition& lambda, const Rectangle& rect) {
    if (!is_theorem_pair(lambda, rect))
        throw std::invalid_argument(lambda.to_string() + " is not (almost) self-complementary in " + rect.to_string());
    const int steps = rect.rows / 2 + rect.cols / 2;
    std::string letters;
    int y = 0, x = rect.cols;
    while (static_cast<int>(letters.size()) < steps) {
        if (y < rect.rows && lambda[static_cast<std::size_t>(y)] >= x) {
            letters.push_back('h');
            ++y;
        } else {
            letters.push_back('v');
            --x;
        }
    }
    Word w(letters);
    const auto back = word_to_selfcomplementary(w, rect);
    if (back.lambda != lambda && back.lambda_c != lambda)
        throw std::logic_error("boundary word " + w.str() + " does not reproduce " + lambda.to_string());
    return w;
}

/// The theorem's witness for a self-complementary λ (or an almost
/// self-complementary pair when both sides are odd), exhaustively certified.
inline WitnessCertificate theorem_witness(const Partition& lambda, const Rectangle& rect, int jobs = 1) {
    if (!is_theorem_pair(lambda, rect))
        throw std::invalid_argument(lambda.to_string() + " is not (almost) self-complementary in " + rect.to_string());
    const auto pair = ComplementaryPair::of(lambda, rect);
    const Word w = selfcomplementary_to_word(lambda, rect);
    if (!rect.both_odd()) {
        const Partition pi = w_max_product_term(pair.lambda, pair.lambda_c, w);
        return detail::certify(rect, pair, pi,
                               rect.both_even() ? WitnessMethod::EvenEvenLemma : WitnessMethod::OddGreedy, jobs);
    }
    // The central box sits past the word's reach in the larger member; one
    // more letter in either direction covers it.
    std::string last_error;
    for (char extra : {'h', 'v'}) {
        const Partition pi = w_max_product_term(pair.lambda, pair.lambda_c, w + extra);
        try {
            return detail::certify(rect, pair, pi, WitnessMethod::OddGreedy, jobs);
        } catch (const CertificationError& e) {
            last_error = e.what();
        }
    }
    throw CertificationError(last_error);
}

/// Witness π = (2λ1−λ2, λ2, b−λ1, b−λ1) for λ ⊆ 2×b with λ1+λ2 ≥ b,
/// certified against every pair μ with μ1+μ2 ≥ λ1+λ2.
inline WitnessCertificate two_row_witness(const Partition& lambda, int b, int jobs = 1) {
    const Rectangle rect(2, b);
    if (!contains(lambda, rect))
        throw std::invalid_argument(lambda.to_string() + " does not fit in " + rect.to_string());
    const int l1 = lambda[0], l2 = lambda[1];
    if (l1 + l2 < b)
        throw std::invalid_argument("two-row witnesses take the larger member: need λ1+λ2 >= " + std::to_string(b));
    const Partition pi({2 * l1 - l2, l2, b - l1, b - l1});
    const auto pair = ComplementaryPair::of(lambda, rect);
    const BigInt coeff = lr_coefficient(pair.lambda, pair.lambda_c, pi);
    if (coeff == 0) throw CertificationError("two-row witness " + pi.to_string() + " does not occur in its product");
    std::vector<ComplementaryPair> later;
    for (const auto& other : complementary_pairs(rect))
        if (other.lambda[0] + other.lambda[1] >= l1 + l2) later.push_back(other);
    const auto others = pairs_containing(pi, pair, later, jobs);
    if (!others.empty())
        throw CertificationError("two-row witness " + pi.to_string() + " also occurs in s_" +
                                 others.front().lambda.to_string() + " s_" + others.front().lambda_c.to_string());
    return {rect, pair, pi, coeff, WitnessMethod::TwoRowFormula, false};
}

/// Swaps rows and columns of everything in a certificate.
inline WitnessCertificate transpose(const WitnessCertificate& cert) {
    const Rectangle rect = cert.rect.transposed();
    auto pair = ComplementaryPair::of(conjugate(cert.pair.lambda), rect);
    return {rect, std::move(pair), conjugate(cert.witness), cert.coefficient, cert.method,
            cert.exclusive_over_all_pairs};
}

/// Base of the row induction: the empty 0×b rectangle lifts to the pair
/// {(b), (b)} in 2×b with witness (2b).
inline WitnessCertificate bootstrap_witness_row_base(int b, int jobs = 1) {
    const Rectangle rect(2, b);
    return detail::certify(rect, ComplementaryPair::of(Partition({b}), rect), Partition({2 * b}),
                           WitnessMethod::RowBootstrap, jobs);
}

/// Lifts a certificate for (a−2)×b to a×b by adding a full top row to both
/// members of the pair and a first row of 2b to the witness.
inline WitnessCertificate bootstrap_witness_row(const WitnessCertificate& inner, int b, int jobs = 1) {
    if (inner.rect.cols != b)
        throw std::invalid_argument("inner certificate is for " + inner.rect.to_string() + ", not width " +
                                    std::to_string(b));
    if (!inner.exclusive_over_all_pairs)
        throw std::invalid_argument("only fully exclusive certificates can be lifted");
    const Rectangle rect(inner.rect.rows + 2, b);
    std::vector<int> lifted{b};
    lifted.insert(lifted.end(), inner.pair.lambda.parts().begin(), inner.pair.lambda.parts().end());
    std::vector<int> witness{2 * b};
    witness.insert(witness.end(), inner.witness.parts().begin(), inner.witness.parts().end());
    return detail::certify(rect, ComplementaryPair::of(Partition(lifted), rect), Partition(witness),
                           WitnessMethod::RowBootstrap, jobs);
}

/// Column analogue of bootstrap_witness_row_base: {(1^a), (1^a)} in a×2.
inline WitnessCertificate bootstrap_witness_col_base(int a, int jobs = 1) {
    auto cert = transpose(bootstrap_witness_row_base(a, jobs));
    cert.method = WitnessMethod::ColumnBootstrap;
    return cert;
}

/// Lifts a×(b−2) to a×b by adding a full left column to both members and a
/// first column of height 2a to the witness.
inline WitnessCertificate bootstrap_witness_col(const WitnessCertificate& inner, int a, int jobs = 1) {
    if (inner.rect.rows != a)
        throw std::invalid_argument("inner certificate is for " + inner.rect.to_string() + ", not height " +
                                    std::to_string(a));
    // Conjugation preserves LR coefficients, so the transposed row
    // certificate is already exhaustive for a×b.
    auto cert = transpose(bootstrap_witness_row(transpose(inner), a, jobs));
    cert.method = WitnessMethod::ColumnBootstrap;
    return cert;
}

/// Witness by row/column induction down to a theorem pair, when the
/// recursion never meets a pair that owns both the top row and left column
/// without being a theorem pair. Returns nullopt in that uncovered case.
inline std::optional<WitnessCertificate> induction_witness(const Partition& lambda, const Rectangle& rect,
                                                           int jobs = 1) {
    const auto pair = ComplementaryPair::of(lambda, rect);
    if (is_theorem_pair(pair.lambda, rect)) return theorem_witness(pair.lambda, rect, jobs);
    const int a = rect.rows, b = rect.cols;
    // Full top row in one member means the other owns the full bottom row.
    if (pair.lambda[0] == b && pair.lambda_c[0] == b) {
        if (a == 2) return bootstrap_witness_row_base(b, jobs);
        const Rectangle inner_rect(a - 2, b);
        const std::vector<int> middle(pair.lambda.parts().begin() + 1, pair.lambda.parts().end());
        auto inner = induction_witness(Partition(middle), inner_rect, jobs);
        if (!inner) return std::nullopt;
        return bootstrap_witness_row(*inner, b, jobs);
    }
    // Full left column in both members.
    if (pair.lambda.length() == a && pair.lambda_c.length() == a) {
        if (b == 2) return bootstrap_witness_col_base(a, jobs);
        std::vector<int> rest = pair.lambda.parts();
        for (int& part : rest) --part;
        auto inner = induction_witness(Partition(rest), Rectangle(a, b - 2), jobs);
        if (!inner) return std::nullopt;
        return bootstrap_witness_col(*inner, a, jobs);
    }
    return std::nullopt;
}

}  // namespace compschur
