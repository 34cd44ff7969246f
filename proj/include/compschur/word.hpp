#pragma once

// Words over {h, v} and the diagram decompositions they drive.
//
// Reading a word left to right, an `h` piece is the rest of the next unused
// row and a `v` piece is the rest of the next unused column, each starting
// at the upper-left-most box not yet covered. After i letters with r h's and
// c v's so far, that box is (r, c) (0-based), so piece lengths are
// λ_r − c for h and λ'_c − r for v (clamped at 0).

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "compschur/lr.hpp"
#include "compschur/partition.hpp"

namespace compschur {

class Word {
public:
    Word() = default;

    explicit Word(std::string letters) : letters_(std::move(letters)) {
        for (char ch : letters_) {
            if (ch == 'h') ++h_count_;
            else if (ch == 'v') ++v_count_;
            else throw std::invalid_argument("word letters must be 'h' or 'v', got '" + letters_ + "'");
        }
    }

    static Word parse(std::string_view text) { return Word(std::string(text)); }

    /// All words with `h` h's and `v` v's, lexicographic (h < v).
    static std::vector<Word> all(int h, int v) {
        std::vector<Word> out;
        std::string buf;
        auto rec = [&](auto& self, int hs, int vs) -> void {
            if (hs == 0 && vs == 0) {
                out.emplace_back(buf);
                return;
            }
            if (hs > 0) {
                buf.push_back('h');
                self(self, hs - 1, vs);
                buf.pop_back();
            }
            if (vs > 0) {
                buf.push_back('v');
                self(self, hs, vs - 1);
                buf.pop_back();
            }
        };
        rec(rec, h, v);
        return out;
    }

    const std::string& str() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    char operator[](std::size_t i) const { return letters_[i]; }
    int h_count() const noexcept { return h_count_; }
    int v_count() const noexcept { return v_count_; }

    Word operator+(char letter) const { return Word(letters_ + letter); }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    std::string letters_;
    int h_count_ = 0;
    int v_count_ = 0;
};

/// One piece of a w-decomposition: `length` boxes starting at (row, col),
/// running right for 'h' and down for 'v'. Coordinates are 0-based.
struct WPiece {
    char direction = 'h';
    int row = 0;
    int col = 0;
    int length = 0;
};

struct WNotation {
    Word word;
    std::vector<int> entries;

    friend bool operator==(const WNotation&, const WNotation&) = default;
};

/// Raised by from_w_notation; `index` is the first offending entry (0-based).
class UnrealizableNotation : public std::invalid_argument {
public:
    UnrealizableNotation(std::size_t index, const std::string& why)
        : std::invalid_argument("w-notation entry " + std::to_string(index + 1) + " is unrealizable: " + why),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// λ admits a w-notation when at most c parts exceed d.
inline bool admits_w_notation(const Partition& lambda, const Word& w) {
    return lambda[static_cast<std::size_t>(w.h_count())] <= w.v_count();
}

inline std::vector<WPiece> w_decompose(const Partition& lambda, const Word& w) {
    if (!admits_w_notation(lambda, w))
        throw std::invalid_argument("partition " + lambda.to_string() + " has more than " +
                                    std::to_string(w.h_count()) + " parts larger than " +
                                    std::to_string(w.v_count()) + "; word " + w.str() + " cannot cover it");
    const Partition conj = conjugate(lambda);
    std::vector<WPiece> pieces;
    pieces.reserve(w.length());
    int r = 0, c = 0;
    for (char letter : w.str()) {
        if (letter == 'h') {
            pieces.push_back({'h', r, c, std::max(0, lambda[static_cast<std::size_t>(r)] - c)});
            ++r;
        } else {
            pieces.push_back({'v', r, c, std::max(0, conj[static_cast<std::size_t>(c)] - r)});
            ++c;
        }
    }
    return pieces;
}

inline WNotation w_notation(const Partition& lambda, const Word& w) {
    WNotation out{w, {}};
    for (const auto& piece : w_decompose(lambda, w)) out.entries.push_back(piece.length);
    return out;
}

inline Partition from_w_notation(const std::vector<int>& entries, const Word& w) {
    if (entries.size() != w.length())
        throw std::invalid_argument("w-notation has " + std::to_string(entries.size()) + " entries but word " +
                                    w.str() + " has length " + std::to_string(w.length()));
    std::vector<int> rows;
    auto row_at = [&](int q) -> int& {
        if (static_cast<std::size_t>(q) >= rows.size()) rows.resize(static_cast<std::size_t>(q) + 1, 0);
        return rows[static_cast<std::size_t>(q)];
    };
    int r = 0, c = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int t = entries[i];
        if (t < 0) throw UnrealizableNotation(i, "negative entry");
        if (w[i] == 'h') {
            if (t > 0) {
                if (row_at(r) != c) throw UnrealizableNotation(i, "row does not start at the next free column");
                row_at(r) = c + t;
            }
            ++r;
        } else {
            for (int q = r; q < r + t; ++q) {
                if (row_at(q) != c) throw UnrealizableNotation(i, "column leaves a gap or overlaps");
                row_at(q) = c + 1;
            }
            ++c;
        }
        for (std::size_t q = 1; q < rows.size(); ++q)
            if (rows[q] > rows[q - 1]) throw UnrealizableNotation(i, "shape is not a partition");
    }
    Partition lambda(rows);
    const auto check = w_notation(lambda, w).entries;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (check[i] != entries[i]) throw UnrealizableNotation(i, "piece does not reach the edge of the diagram");
    return lambda;
}

inline Partition from_w_notation(const WNotation& notation) { return from_w_notation(notation.entries, notation.word); }

/// Lexicographic comparison of w-notations under one word.
inline std::strong_ordering w_compare(const Partition& lhs, const Partition& rhs, const Word& w) {
    return w_notation(lhs, w).entries <=> w_notation(rhs, w).entries;
}

/// The w-maximal term of s_μ s_ν: its w-notation is μ^w + ν^w.
inline Partition w_max_product_term(const Partition& mu, const Partition& nu, const Word& w) {
    const auto a = w_notation(mu, w).entries;
    const auto b = w_notation(nu, w).entries;
    std::vector<int> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    return from_w_notation(sum, w);
}

/// LR tableau of shape π/μ and content ν, π = w_max_product_term(μ, ν, w):
/// piece i of μ is extended by ν^w_i boxes labelled with the (1-based) row
/// numbers of the boxes of piece i of ν.
inline LRTableau lemma_filling(const Partition& mu, const Partition& nu, const Word& w) {
    const Partition pi = w_max_product_term(mu, nu, w);
    const auto mu_pieces = w_decompose(mu, w);
    const auto nu_pieces = w_decompose(nu, w);
    const auto pi_pieces = w_decompose(pi, w);

    LRTableau t{pi, mu, {}};
    t.rows.resize(static_cast<std::size_t>(pi.length()));
    for (int r = 0; r < pi.length(); ++r)
        t.rows[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(pi[static_cast<std::size_t>(r)] - mu[static_cast<std::size_t>(r)]), 0);

    for (std::size_t i = 0; i < pi_pieces.size(); ++i) {
        const auto& piece = pi_pieces[i];
        const auto& source = nu_pieces[i];
        for (int step = 0; step < source.length; ++step) {
            const int along = mu_pieces[i].length + step;
            const int row = piece.direction == 'h' ? piece.row : piece.row + along;
            const int col = piece.direction == 'h' ? piece.col + along : piece.col;
            const int label = (source.direction == 'h' ? source.row : source.row + step) + 1;
            t.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - mu[static_cast<std::size_t>(row)])] = label;
        }
    }
    return t;
}

}  // namespace compschur
