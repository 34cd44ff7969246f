#pragma once

// Littlewood-Richardson coefficients by backtracking over LR fillings.
//
// A filling is grown one letter at a time: all copies of letter k form a
// horizontal strip added to the shape built from letters < k. Column
// strictness is the strip condition (row r may only grow up to the length
// row r-1 had before letter k), and the lattice condition is checked per row
// as "k's in rows <= r never exceed (k-1)'s in rows < r", which is exactly
// the reading-word prefix condition for rows read right to left.

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "compschur/expansion.hpp"
#include "compschur/partition.hpp"

namespace compschur {

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
        if (!compschur::contains(inner, outer))
            throw std::invalid_argument("skew shape " + outer.to_string() + "/" + inner.to_string() +
                                        " is not nested");
    }

    int size() const { return outer.size() - inner.size(); }
};

/// A skew tableau; `rows[r]` holds the entries of row r of outer/inner, left to right.
struct LRTableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> rows;

    /// Multiplicity of each letter 1, 2, ... (zero-based index = letter - 1).
    std::vector<int> content() const {
        std::vector<int> counts;
        for (const auto& row : rows)
            for (int v : row) {
                if (v >= 1 && static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
                if (v >= 1) ++counts[static_cast<std::size_t>(v - 1)];
            }
        return counts;
    }

    /// Entry at a cell of the skew part, or 0 if the cell is not in it.
    int at(int row, int col) const {
        if (row < 0 || static_cast<std::size_t>(row) >= rows.size()) return 0;
        const int offset = col - inner[static_cast<std::size_t>(row)];
        if (offset < 0 || offset >= static_cast<int>(rows[static_cast<std::size_t>(row)].size())) return 0;
        return rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(offset)];
    }
};

/// Empty string when `t` is a valid LR tableau, else a description of the
/// first violated condition.
inline std::string lr_tableau_violation(const LRTableau& t) {
    if (!contains(t.inner, t.outer)) return "inner shape not contained in outer";
    if (t.rows.size() < static_cast<std::size_t>(t.outer.length())) return "missing rows";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const int expected = t.outer[r] - t.inner[r];
        if (static_cast<int>(t.rows[r].size()) != expected)
            return "row " + std::to_string(r + 1) + " has the wrong number of entries";
        for (std::size_t j = 0; j < t.rows[r].size(); ++j) {
            if (t.rows[r][j] < 1) return "non-positive entry in row " + std::to_string(r + 1);
            if (j > 0 && t.rows[r][j] < t.rows[r][j - 1]) return "row " + std::to_string(r + 1) + " decreases";
        }
    }
    for (int r = 1; r < t.outer.length(); ++r)
        for (int col = t.inner[static_cast<std::size_t>(r)]; col < t.outer[static_cast<std::size_t>(r)]; ++col) {
            const int above = t.at(r - 1, col);
            if (above != 0 && above >= t.at(r, col))
                return "column " + std::to_string(col + 1) + " not strictly increasing at row " + std::to_string(r + 1);
        }
    std::vector<int> seen;
    for (const auto& row : t.rows)
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            const auto letter = static_cast<std::size_t>(*it);
            if (seen.size() < letter) seen.resize(letter, 0);
            ++seen[letter - 1];
            if (letter > 1 && seen[letter - 1] > seen[letter - 2]) return "reading word is not a lattice word";
        }
    return {};
}

inline bool is_lr_tableau(const LRTableau& t) { return lr_tableau_violation(t).empty(); }

namespace detail {

/// Backtracking LR filler. `outer_bound` (when set) caps every row and the
/// run only reports fillings whose final shape is exactly that bound.
class LRFiller {
public:
    LRFiller(const Partition& inner, int max_rows, const Partition* outer_bound)
        : rows_(std::max(max_rows, inner.length())), outer_(outer_bound) {
        shape_.assign(static_cast<std::size_t>(rows_), 0);
        for (int r = 0; r < inner.length(); ++r) shape_[static_cast<std::size_t>(r)] = inner[static_cast<std::size_t>(r)];
    }

    /// Fillings with the given content (weakly decreasing letter counts).
    /// `done(shape, strips)` fires once per completed tableau.
    template <typename Done>
    void run_content(const std::vector<int>& content, Done&& done) {
        content_ = content;
        free_content_ = false;
        prepare(content_.size());
        next_letter(0, done);
    }

    /// Fillings of the fixed outer shape with any lattice content.
    template <typename Done>
    void run_free(Done&& done) {
        free_content_ = true;
        content_.clear();
        prepare(static_cast<std::size_t>(rows_) + 1);
        next_letter(0, done);
    }

    const std::vector<int>& shape() const { return shape_; }

private:
    static constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

    void prepare(std::size_t letters) {
        strips_.assign(letters, std::vector<int>(static_cast<std::size_t>(rows_), 0));
        before_.assign(letters, {});
        prev_cum_.assign(letters, {});
        suffix_cap_.assign(letters, {});
    }

    int outer_at(int r) const { return outer_ ? (*outer_)[static_cast<std::size_t>(r)] : kUnbounded; }

    bool shape_is_outer() const {
        for (int r = 0; r < rows_; ++r)
            if (shape_[static_cast<std::size_t>(r)] != outer_at(r)) return false;
        return true;
    }

    // After `placed` letters with `remaining_letters` still to come, every
    // column of outer/shape must be short enough to take one of each.
    bool columns_fit(int remaining_letters) const {
        if (!outer_) return true;
        for (int r = 0; r + remaining_letters < rows_; ++r)
            if ((*outer_)[static_cast<std::size_t>(r + remaining_letters)] > shape_[static_cast<std::size_t>(r)])
                return false;
        return true;
    }

    template <typename Done>
    void next_letter(std::size_t k, Done& done) {
        if (free_content_) {
            if (shape_is_outer()) {
                done(shape_, strips_, k);
                return;
            }
            if (k >= strips_.size()) return;
            const int prev = k == 0 ? kUnbounded : count_of(k - 1);
            int missing = 0;
            for (int r = 0; r < rows_; ++r) missing += outer_at(r) - shape_[static_cast<std::size_t>(r)];
            for (int m = std::min(prev, missing); m >= 1; --m) begin_letter(k, m, done);
            return;
        }
        if (k == content_.size()) {
            if (!outer_ || shape_is_outer()) done(shape_, strips_, k);
            return;
        }
        if (content_[k] == 0) {
            next_letter(k + 1, done);
            return;
        }
        begin_letter(k, content_[k], done);
    }

    int count_of(std::size_t k) const {
        int total = 0;
        for (int x : strips_[k]) total += x;
        return total;
    }

    template <typename Done>
    void begin_letter(std::size_t k, int count, Done& done) {
        before_[k] = shape_;
        auto& prev_cum = prev_cum_[k];
        prev_cum.assign(static_cast<std::size_t>(rows_), kUnbounded);
        if (k > 0) {
            int running = 0;
            for (int r = 0; r < rows_; ++r) {
                running += strips_[k - 1][static_cast<std::size_t>(r)];
                prev_cum[static_cast<std::size_t>(r)] = running;
            }
        }
        auto& cap = suffix_cap_[k];
        cap.assign(static_cast<std::size_t>(rows_) + 1, 0);
        for (int r = rows_ - 1; r >= 0; --r) {
            const int bound = std::min(r == 0 ? kUnbounded : before_[k][static_cast<std::size_t>(r - 1)], outer_at(r));
            const int room = std::max(0, bound - shape_[static_cast<std::size_t>(r)]);
            cap[static_cast<std::size_t>(r)] = std::min(kUnbounded, cap[static_cast<std::size_t>(r) + 1] + room);
        }
        place_row(k, 0, count, 0, done);
    }

    template <typename Done>
    void place_row(std::size_t k, int r, int remaining, int cum, Done& done) {
        if (remaining == 0) {
            const int later = free_content_ ? 0 : static_cast<int>(content_.size() - k - 1);
            if (free_content_ || columns_fit(later)) next_letter(k + 1, done);
            return;
        }
        if (r >= rows_ || suffix_cap_[k][static_cast<std::size_t>(r)] < remaining) return;
        const auto row = static_cast<std::size_t>(r);
        const int bound = std::min(r == 0 ? kUnbounded : before_[k][row - 1], outer_at(r));
        int most = std::min(bound - shape_[row], remaining);
        if (k > 0) most = std::min(most, (r == 0 ? 0 : prev_cum_[k][row - 1]) - cum);
        for (int x = most; x >= 0; --x) {
            shape_[row] += x;
            strips_[k][row] = x;
            place_row(k, r + 1, remaining - x, cum + x, done);
            shape_[row] -= x;
            strips_[k][row] = 0;
        }
    }

    int rows_;
    const Partition* outer_;
    bool free_content_ = false;
    std::vector<int> content_;
    std::vector<int> shape_;
    std::vector<std::vector<int>> strips_;
    std::vector<std::vector<int>> before_;
    std::vector<std::vector<int>> prev_cum_;
    std::vector<std::vector<int>> suffix_cap_;
};

inline LRTableau assemble(const Partition& inner, const std::vector<int>& shape,
                          const std::vector<std::vector<int>>& strips, std::size_t letters) {
    LRTableau t{Partition(shape), inner, {}};
    t.rows.resize(static_cast<std::size_t>(t.outer.length()));
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        for (std::size_t k = 0; k < letters; ++k)
            t.rows[r].insert(t.rows[r].end(), static_cast<std::size_t>(strips[k][r]), static_cast<int>(k + 1));
    return t;
}

}  // namespace detail

/// s_λ · s_μ in the Schur basis.
inline SchurExpansion product_expansion(const Partition& lambda, const Partition& mu) {
    std::map<std::vector<int>, std::uint64_t> counts;
    detail::LRFiller filler(lambda, lambda.length() + mu.length(), nullptr);
    filler.run_content(mu.parts(), [&](const std::vector<int>& shape, const auto&, std::size_t) { ++counts[shape]; });
    SchurExpansion out;
    for (const auto& [shape, n] : counts) out.add(Partition(shape), BigInt(n));
    return out;
}

/// Number of LR tableaux of shape ν/λ with content μ, i.e. c^ν_{λμ}.
inline BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size() || !contains(lambda, nu) || !contains(mu, nu)) return 0;
    std::uint64_t n = 0;
    detail::LRFiller filler(lambda, nu.length(), &nu);
    filler.run_content(mu.parts(), [&](const auto&, const auto&, std::size_t) { ++n; });
    return BigInt(n);
}

inline BigInt count_lr_tableaux(const SkewShape& shape, const Partition& content) {
    return lr_coefficient(shape.inner, content, shape.outer);
}

/// Visits every LR tableau of the given shape and content.
template <typename Visitor>
void for_each_lr_tableau(const SkewShape& shape, const Partition& content, Visitor&& visit) {
    if (shape.size() != content.size()) return;
    detail::LRFiller filler(shape.inner, shape.outer.length(), &shape.outer);
    filler.run_content(content.parts(), [&](const std::vector<int>& s, const auto& strips, std::size_t letters) {
        visit(detail::assemble(shape.inner, s, strips, letters));
    });
}

/// Schur expansion of the skew function s_{outer/inner}: ν ↦ c^{outer}_{inner,ν}.
inline SchurExpansion skew_expansion(const Partition& outer, const Partition& inner) {
    const SkewShape shape(outer, inner);
    if (shape.size() == 0) return SchurExpansion::single(Partition{});
    std::map<std::vector<int>, std::uint64_t> counts;
    detail::LRFiller filler(inner, outer.length(), &shape.outer);
    filler.run_free([&](const auto&, const std::vector<std::vector<int>>& strips, std::size_t letters) {
        std::vector<int> content(letters, 0);
        for (std::size_t k = 0; k < letters; ++k)
            for (int x : strips[k]) content[k] += x;
        ++counts[content];
    });
    SchurExpansion out;
    for (const auto& [content, n] : counts) out.add(Partition(content), BigInt(n));
    return out;
}

/// Product of two expansions, term by term through product_expansion.
inline SchurExpansion multiply(const SchurExpansion& lhs, const SchurExpansion& rhs) {
    SchurExpansion out;
    for (const auto& [a, ca] : lhs.terms())
        for (const auto& [b, cb] : rhs.terms())
            for (const auto& [nu, c] : product_expansion(a, b)) out.add(nu, ca * cb * c);
    return out;
}

}  // namespace compschur
