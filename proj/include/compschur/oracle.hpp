#pragma once

// Independent Schur products for cross-checking the LR engine:
// s_μ = Σ_ρ (K⁻¹)_{ρμ} h_ρ, then s_λ·h_ρ by repeated Pieri steps.
// Nothing here calls into lr.hpp.

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "compschur/expansion.hpp"
#include "compschur/partition.hpp"

namespace compschur::oracle {

/// Partitions of n in reverse lexicographic order: (n) first, (1^n) last.
/// If ν dominates μ then ν comes no later than μ.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto& self, int left, int max_part) -> void {
        if (left == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline bool dominates(const Partition& nu, const Partition& mu) {
    int a = 0, b = 0;
    const int len = std::max(nu.length(), mu.length());
    for (int i = 0; i < len; ++i) {
        a += nu[static_cast<std::size_t>(i)];
        b += mu[static_cast<std::size_t>(i)];
        if (a < b) return false;
    }
    return true;
}

/// s_λ · h_k: every ν with ν/λ a horizontal strip of k boxes, coefficient 1.
inline SchurExpansion pieri_row(const Partition& lambda, int k) {
    SchurExpansion out;
    const int len = lambda.length() + 1;
    std::vector<int> nu(static_cast<std::size_t>(len), 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == len) {
            if (left == 0) out.add(Partition(nu), 1);
            return;
        }
        const int low = lambda[static_cast<std::size_t>(i)];
        const int high = i == 0 ? low + left : std::min(lambda[static_cast<std::size_t>(i - 1)], low + left);
        for (int v = low; v <= high; ++v) {
            nu[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, left - (v - low));
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Semistandard tableaux of shape ν and content μ, filled cell by cell.
inline BigInt kostka(const Partition& nu, const Partition& mu) {
    if (nu.size() != mu.size()) throw std::invalid_argument("kostka: shapes of different sizes");
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < nu.length(); ++r)
        for (int c = 0; c < nu[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(nu.length()));
    for (int r = 0; r < nu.length(); ++r) grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(r)]), 0);
    std::vector<int> left = mu.parts();
    std::uint64_t count = 0;
    auto rec = [&](auto& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[idx];
        int low = 1;
        if (c > 0) low = std::max(low, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) low = std::max(low, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = low; v <= static_cast<int>(left.size()); ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
            --left[static_cast<std::size_t>(v - 1)];
            grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            self(self, idx + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    rec(rec, 0);
    return BigInt(count);
}

/// K_{νμ} over partitions of one degree, indexed in partitions_of() order,
/// which makes it upper unitriangular.
struct KostkaMatrix {
    int degree = 0;
    std::vector<Partition> index;
    std::vector<std::vector<BigInt>> entries;

    static KostkaMatrix build(int n) {
        KostkaMatrix m;
        m.degree = n;
        m.index = partitions_of(n);
        const std::size_t size = m.index.size();
        m.entries.assign(size, std::vector<BigInt>(size, 0));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i; j < size; ++j)
                if (dominates(m.index[i], m.index[j])) m.entries[i][j] = kostka(m.index[i], m.index[j]);
        return m;
    }

    std::size_t position(const Partition& p) const {
        for (std::size_t i = 0; i < index.size(); ++i)
            if (index[i] == p) return i;
        throw std::invalid_argument("partition " + p.to_string() + " has the wrong degree");
    }

    /// Exact inverse by back substitution; relies on unit diagonal.
    std::vector<std::vector<BigInt>> inverse() const {
        const std::size_t size = index.size();
        std::vector<std::vector<BigInt>> inv(size, std::vector<BigInt>(size, 0));
        for (std::size_t j = 0; j < size; ++j) {
            if (entries[j][j] != 1) throw std::logic_error("Kostka matrix is not unitriangular");
            for (std::size_t ii = j + 1; ii-- > 0;) {
                BigInt value = ii == j ? BigInt(1) : BigInt(0);
                for (std::size_t k = ii + 1; k <= j; ++k) value -= entries[ii][k] * inv[k][j];
                inv[ii][j] = value;
            }
        }
        return inv;
    }
};

namespace detail {

struct KostkaData {
    KostkaMatrix matrix;
    std::vector<std::vector<BigInt>> inverse;
};

inline const KostkaData& kostka_data(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<KostkaData>> cache;
    std::lock_guard lock(guard);
    auto& slot = cache[n];
    if (!slot) {
        auto matrix = KostkaMatrix::build(n);
        auto inverse = matrix.inverse();
        slot = std::make_unique<KostkaData>(KostkaData{std::move(matrix), std::move(inverse)});
    }
    return *slot;
}

}  // namespace detail

/// s_λ · h_ρ with h_ρ = h_{ρ1} h_{ρ2} ⋯.
inline SchurExpansion times_complete(const Partition& lambda, const Partition& rho) {
    SchurExpansion current = SchurExpansion::single(lambda);
    for (int part : rho.parts()) {
        SchurExpansion next;
        for (const auto& [nu, c] : current.terms())
            for (const auto& [kappa, one] : pieri_row(nu, part)) next.add(kappa, c * one);
        current = std::move(next);
    }
    return current;
}

inline SchurExpansion product_expansion_oracle(const Partition& lambda, const Partition& mu) {
    const auto& data = detail::kostka_data(mu.size());
    const std::size_t col = data.matrix.position(mu);
    SignedCombination total;
    for (std::size_t row = 0; row <= col; ++row) {
        const BigInt& coeff = data.inverse[row][col];
        if (coeff == 0) continue;
        accumulate(total, times_complete(lambda, data.matrix.index[row]), coeff);
    }
    SchurExpansion out;
    for (const auto& [nu, c] : total) {
        if (c < 0) throw std::logic_error("oracle product has a negative coefficient at " + nu.to_string());
        out.add(nu, c);
    }
    return out;
}

/// f^λ by the hook length formula.
inline BigInt syt_count(const Partition& lambda) {
    const Partition conj = [&] {
        std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
        for (int part : lambda.parts())
            for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
        return Partition(std::move(cols));
    }();
    BigInt numerator = 1;
    for (int i = 2; i <= lambda.size(); ++i) numerator *= i;
    BigInt hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c)
            hooks *= (lambda[static_cast<std::size_t>(r)] - c - 1) + (conj[static_cast<std::size_t>(c)] - r - 1) + 1;
    return numerator / hooks;
}

/// f^λ by removing corners recursively; slow, for checking syt_count.
inline BigInt syt_count_by_enumeration(const Partition& lambda) {
    if (lambda.size() == 0) return 1;
    BigInt total = 0;
    for (int r = 0; r < lambda.length(); ++r) {
        if (lambda[static_cast<std::size_t>(r)] > lambda[static_cast<std::size_t>(r + 1)]) {
            std::vector<int> smaller = lambda.parts();
            --smaller[static_cast<std::size_t>(r)];
            total += syt_count_by_enumeration(Partition(std::move(smaller)));
        }
    }
    return total;
}

}  // namespace compschur::oracle
