#pragma once

// Partitions, rectangles, complementation and enumeration inside a box.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace compschur {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so the zero partition is the empty sequence.
///
/// Ordering (operator<=>) is graded lexicographic: first by size, then
/// lexicographically on the parts. Every sorted report in the library uses it.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition has a negative part");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses `5-4-1-1`; `0` is the zero partition.
    static Partition parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty partition string");
        std::vector<int> parts;
        std::size_t pos = 0;
        while (true) {
            const auto dash = text.find('-', pos);
            const auto token = text.substr(pos, dash == std::string_view::npos ? text.size() - pos : dash - pos);
            int value = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 0)
                throw std::invalid_argument("bad partition token '" + std::string(token) + "' in '" +
                                            std::string(text) + "'");
            parts.push_back(value);
            if (dash == std::string_view::npos) break;
            pos = dash + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool is_zero() const noexcept { return parts_.empty(); }

    /// 0-based row access; rows past the end read as 0.
    int operator[](std::size_t row) const noexcept { return row < parts_.size() ? parts_[row] : 0; }

    /// 0-based cell test.
    bool has_cell(int row, int col) const noexcept {
        return row >= 0 && col >= 0 && col < (*this)[static_cast<std::size_t>(row)];
    }

    std::string to_string() const {
        if (parts_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += '-';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

    friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs) {
        if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
        return lhs.parts_ <=> rhs.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// The a×b rectangle (b^a): `rows` parts each equal to `cols`.
struct Rectangle {
    int rows = 1;
    int cols = 1;

    Rectangle() = default;
    Rectangle(int a, int b) : rows(a), cols(b) {
        if (a < 1 || b < 1) throw std::invalid_argument("rectangle sides must be positive");
    }

    static Rectangle parse(std::string_view text) {
        const auto x = text.find('x');
        auto number = [&](std::string_view token) {
            int value = 0;
            const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
                throw std::invalid_argument("bad rectangle '" + std::string(text) + "', expected AxB");
            return value;
        };
        if (x == std::string_view::npos)
            throw std::invalid_argument("bad rectangle '" + std::string(text) + "', expected AxB");
        return Rectangle(number(text.substr(0, x)), number(text.substr(x + 1)));
    }

    std::string to_string() const { return std::to_string(rows) + "x" + std::to_string(cols); }
    Partition as_partition() const { return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols)); }
    Rectangle transposed() const { return {cols, rows}; }
    int area() const noexcept { return rows * cols; }
    bool both_odd() const noexcept { return rows % 2 == 1 && cols % 2 == 1; }
    bool both_even() const noexcept { return rows % 2 == 0 && cols % 2 == 0; }

    friend bool operator==(const Rectangle&, const Rectangle&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Rectangle& r) { return os << r.to_string(); }
};

inline bool contains(const Partition& inner, const Partition& outer) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

inline bool contains(const Partition& inner, const Rectangle& rect) {
    return inner.length() <= rect.rows && inner[0] <= rect.cols;
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// Boxes of `rect` not in `lambda`, rotated by 180 degrees.
inline Partition complement(const Partition& lambda, const Rectangle& rect) {
    if (!contains(lambda, rect))
        throw std::invalid_argument("partition " + lambda.to_string() + " does not fit in " + rect.to_string());
    std::vector<int> parts(static_cast<std::size_t>(rect.rows));
    for (int i = 0; i < rect.rows; ++i) parts[static_cast<std::size_t>(i)] = rect.cols - lambda[rect.rows - 1 - i];
    return Partition(std::move(parts));
}

inline bool is_self_complementary(const Partition& lambda, const Rectangle& rect) {
    return complement(lambda, rect) == lambda;
}

/// Odd×odd only: λ and its complement differ exactly in the central box.
inline bool is_almost_self_complementary(const Partition& lambda, const Rectangle& rect) {
    if (!rect.both_odd())
        throw std::invalid_argument("almost self-complementarity needs both sides odd, got " + rect.to_string());
    const Partition comp = complement(lambda, rect);
    const int centre_row = rect.rows / 2;
    const int centre_col = rect.cols / 2;
    for (int i = 0; i < rect.rows; ++i) {
        const int lo = std::min(lambda[i], comp[i]);
        const int hi = std::max(lambda[i], comp[i]);
        if (i == centre_row) {
            if (hi - lo != 1 || lo != centre_col) return false;
        } else if (lo != hi) {
            return false;
        }
    }
    return true;
}

/// True for self-complementary λ, or almost self-complementary λ when both
/// sides are odd. These are the pairs the theorem certifies.
inline bool is_theorem_pair(const Partition& lambda, const Rectangle& rect) {
    return rect.both_odd() ? is_almost_self_complementary(lambda, rect) : is_self_complementary(lambda, rect);
}

/// Calls `visit` for every λ ⊆ rect, in no particular order.
template <typename Visitor>
void for_each_subpartition(const Rectangle& rect, Visitor&& visit) {
    std::vector<int> parts(static_cast<std::size_t>(rect.rows), 0);
    std::function<void(int, int)> fill = [&](int row, int bound) {
        if (row == rect.rows) {
            visit(Partition(parts));
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            parts[static_cast<std::size_t>(row)] = v;
            fill(row + 1, v);
        }
        parts[static_cast<std::size_t>(row)] = 0;
    };
    fill(0, rect.cols);
}

/// Every λ ⊆ rect exactly once, graded-lex sorted.
inline std::vector<Partition> enumerate_subpartitions(const Rectangle& rect) {
    std::vector<Partition> out;
    for_each_subpartition(rect, [&](Partition p) { out.push_back(std::move(p)); });
    std::sort(out.begin(), out.end());
    return out;
}

/// An unordered pair {λ, λᶜ}. `lambda` is the canonical member: the larger
/// one by size, ties broken by graded-lex order. For odd×odd rectangles this
/// is the member holding the central box.
struct ComplementaryPair {
    Partition lambda;
    Partition lambda_c;

    static ComplementaryPair of(const Partition& mu, const Rectangle& rect) {
        Partition comp = complement(mu, rect);
        if (comp > mu) return {std::move(comp), mu};
        return {mu, std::move(comp)};
    }

    bool is_square() const { return lambda == lambda_c; }

    friend bool operator==(const ComplementaryPair&, const ComplementaryPair&) = default;
    friend auto operator<=>(const ComplementaryPair& lhs, const ComplementaryPair& rhs) {
        if (auto c = lhs.lambda <=> rhs.lambda; c != 0) return c;
        return lhs.lambda_c <=> rhs.lambda_c;
    }
};

/// All unordered complementary pairs, sorted by canonical member.
inline std::vector<ComplementaryPair> complementary_pairs(const Rectangle& rect) {
    std::vector<ComplementaryPair> out;
    for_each_subpartition(rect, [&](const Partition& mu) {
        auto pair = ComplementaryPair::of(mu, rect);
        if (pair.lambda == mu) out.push_back(std::move(pair));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

/// Number of partitions of n with at most `rows` parts, each at most `cols`
/// (a Gaussian binomial coefficient), by dynamic programming over the largest part.
inline std::uint64_t count_partitions_in_box(int n, int rows, int cols) {
    if (n < 0) return 0;
    // table[k][m] = partitions of m with at most k parts, each <= current bound
    // Built by adding allowed part sizes 1..cols one at a time.
    std::vector<std::vector<std::uint64_t>> table(static_cast<std::size_t>(rows + 1),
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    for (auto& row : table) row[0] = 1;
    for (int part = 1; part <= cols; ++part)
        for (int k = 1; k <= rows; ++k)
            for (int m = part; m <= n; ++m)
                table[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] +=
                    table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - part)];
    return table[static_cast<std::size_t>(rows)][static_cast<std::size_t>(n)];
}

}  // namespace compschur

template <>
struct std::hash<compschur::Partition> {
    std::size_t operator()(const compschur::Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 0x100000001b3ULL;
        return h;
    }
};
