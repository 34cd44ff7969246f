#pragma once

// Linear independence of the complementary products over a rectangle:
// exact rank certification, the witness-elimination fixpoint, and the two
// generalisations that fail.

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "compschur/cache.hpp"
#include "compschur/lr.hpp"
#include "compschur/parallel.hpp"
#include "compschur/partition.hpp"

namespace compschur {

/// Rows are complementary pairs, columns every partition occurring in some
/// product; `entries[row]` is sorted by column index.
struct ProductMatrix {
    using Entry = std::pair<std::uint32_t, BigInt>;

    Rectangle rect;
    std::vector<ComplementaryPair> rows;
    std::vector<Partition> columns;
    std::vector<std::vector<Entry>> entries;

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& row : entries) n += row.size();
        return n;
    }

    BigInt at(std::size_t row, std::uint32_t col) const {
        const auto& r = entries[row];
        const auto it = std::lower_bound(r.begin(), r.end(), col, [](const Entry& e, std::uint32_t c) { return e.first < c; });
        return it != r.end() && it->first == col ? it->second : BigInt(0);
    }
};

/// Expands every complementary product (through `cache` when given) and
/// lays them out with graded-lex row and column order.
inline ProductMatrix build_product_matrix(const Rectangle& rect, int jobs = 1, ExpansionCache* cache = nullptr) {
    ProductMatrix m;
    m.rect = rect;
    m.rows = complementary_pairs(rect);
    std::vector<SchurExpansion> products(m.rows.size());
    parallel_for(m.rows.size(), jobs, [&](std::size_t i) {
        const auto& p = m.rows[i];
        products[i] = cache ? cache->expand(p.lambda, p.lambda_c) : product_expansion(p.lambda, p.lambda_c);
    });
    for (const auto& product : products)
        for (const auto& [nu, c] : product) m.columns.push_back(nu);
    std::sort(m.columns.begin(), m.columns.end());
    m.columns.erase(std::unique(m.columns.begin(), m.columns.end()), m.columns.end());
    m.entries.resize(m.rows.size());
    parallel_for(m.rows.size(), jobs, [&](std::size_t i) {
        auto& row = m.entries[i];
        row.reserve(products[i].size());
        for (const auto& [nu, c] : products[i]) {
            const auto col = std::lower_bound(m.columns.begin(), m.columns.end(), nu) - m.columns.begin();
            row.emplace_back(static_cast<std::uint32_t>(col), c);
        }
    });
    return m;
}

/// Distinct Schur functions across all complementary products, without
/// keeping the products themselves. For rectangles too large to hold the
/// whole matrix in memory.
inline std::size_t count_product_terms(const Rectangle& rect, int jobs = 1) {
    const auto pairs = complementary_pairs(rect);
    std::set<Partition> seen;
    std::mutex guard;
    parallel_for(pairs.size(), jobs, [&](std::size_t i) {
        const auto product = product_expansion(pairs[i].lambda, pairs[i].lambda_c);
        std::lock_guard lock(guard);
        for (const auto& [nu, c] : product) seen.insert(nu);
    });
    return seen.size();
}

// ---------------------------------------------------------------------------
// Rank

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    for (; exp; exp >>= 1) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline constexpr std::uint64_t kMinModulus = 1ULL << 20;
inline const std::vector<std::uint64_t> kDefaultPrimes{2147483647ULL, 2147483629ULL};
// Extra moduli tried after the requested ones when rank comes out short.
inline const std::vector<std::uint64_t> kBackupPrimes{2147483587ULL, 4294967291ULL, 1000000007ULL};

/// Rank over GF(p) by sparse row reduction; pivots are kept normalised.
inline std::size_t rank_mod_p(const ProductMatrix& m, std::uint64_t p) {
    if (p <= kMinModulus || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " must be a prime above 2^20");
    using SparseRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    std::unordered_map<std::uint32_t, SparseRow> pivots;
    const BigInt modulus(p);
    std::size_t rank = 0;
    SparseRow merged;
    for (const auto& source : m.entries) {
        SparseRow row;
        for (const auto& [col, c] : source) {
            const auto v = static_cast<std::uint64_t>(c % modulus);
            if (v) row.emplace_back(col, v);
        }
        while (!row.empty()) {
            const auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                const std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
                for (auto& [col, v] : row) v = mul_mod(v, inv, p);
                pivots.emplace(row.front().first, std::move(row));
                ++rank;
                break;
            }
            // row -= row.front() * pivot
            const std::uint64_t factor = row.front().second;
            const auto& pivot = it->second;
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                    merged.push_back(row[i++]);
                } else {
                    const std::uint64_t sub = mul_mod(factor, pivot[j].second, p);
                    if (i < row.size() && row[i].first == pivot[j].first) {
                        const std::uint64_t v = (row[i].second + p - sub) % p;
                        if (v) merged.emplace_back(row[i].first, v);
                        ++i;
                    } else {
                        merged.emplace_back(pivot[j].first, (p - sub) % p);
                    }
                    ++j;
                }
            }
            row.swap(merged);
        }
    }
    return rank;
}

inline std::size_t rank_full(const ProductMatrix& m, std::uint64_t p) { return rank_mod_p(m, p); }

/// Exact rank over the rationals by fraction-free (Bareiss) elimination on
/// the columns the matrix actually uses.
inline std::size_t exact_rank(const ProductMatrix& m) {
    const std::size_t rows = m.rows.size();
    const std::size_t cols = m.columns.size();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [col, c] : m.entries[r]) a[r][col] = c;
    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = col + 1; k < cols; ++k)
                a[r][k] = (a[rank][col] * a[r][k] - a[r][col] * a[rank][k]) / prev;
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

struct RankReport {
    Rectangle rect;
    std::size_t rows = 0;
    std::size_t rank = 0;
    /// Modulus that certified full rank; 0 when the exact pass decided.
    std::uint64_t prime = 0;
    bool certified = false;
    std::vector<std::pair<std::uint64_t, std::size_t>> attempts;
    bool exact_checked = false;
};

/// Full rank modulo one prime certifies rational independence. On a short
/// rank, at least three moduli are tried before the exact computation runs.
inline RankReport certify_rank(const ProductMatrix& m, std::vector<std::uint64_t> primes = kDefaultPrimes) {
    if (primes.empty()) primes = kDefaultPrimes;
    for (auto p : primes)
        if (p <= kMinModulus || !is_prime(p))
            throw std::invalid_argument("modulus " + std::to_string(p) + " must be a prime above 2^20");
    for (auto p : kBackupPrimes) {
        if (primes.size() >= 3) break;
        if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    RankReport report;
    report.rect = m.rect;
    report.rows = m.rows.size();
    for (auto p : primes) {
        const auto r = rank_mod_p(m, p);
        report.attempts.emplace_back(p, r);
        report.rank = std::max(report.rank, r);
        if (r == report.rows) {
            report.prime = p;
            report.certified = true;
            return report;
        }
    }
    report.exact_checked = true;
    report.rank = exact_rank(m);
    report.certified = report.rank == report.rows;
    return report;
}

// ---------------------------------------------------------------------------
// Elimination

struct Elimination {
    ComplementaryPair pair;
    Partition witness;
    BigInt coefficient;
};

struct EliminationRound {
    std::size_t index = 0;
    std::vector<Elimination> eliminated;
};

struct EliminationTrace {
    Rectangle rect;
    bool require_unit_coefficient = false;
    std::vector<EliminationRound> rounds;
    std::vector<ComplementaryPair> leftover;

    bool emptied() const { return leftover.empty(); }
    std::string status() const { return emptied() ? "empty" : "stuck"; }
};

/// P_0 = all products; W_i = products owning a Schur function that no other
/// product in P_i contains (with coefficient one when required); repeat on
/// P_i \ W_i until W_i is empty. Each product's witness is its first such
/// column in graded-lex order.
inline EliminationTrace eliminate(const ProductMatrix& m, bool require_unit_coefficient, int jobs = 1) {
    EliminationTrace trace;
    trace.rect = m.rect;
    trace.require_unit_coefficient = require_unit_coefficient;

    // Incidence index: how many live rows hold a column, and the sum of
    // their ids, which is the owner whenever the count is one.
    std::vector<std::uint32_t> count(m.columns.size(), 0);
    std::vector<std::uint64_t> owner_sum(m.columns.size(), 0);
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (const auto& [col, c] : m.entries[r]) {
            ++count[col];
            owner_sum[col] += r;
        }
    std::vector<char> alive(m.rows.size(), 1);
    std::size_t remaining = m.rows.size();

    const std::size_t chunks = static_cast<std::size_t>(std::max(1, jobs));
    while (remaining > 0) {
        // Per-chunk scan of the column range; merged in column order.
        std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> found(chunks);
        const std::size_t span = (m.columns.size() + chunks - 1) / chunks;
        parallel_for(chunks, jobs, [&](std::size_t chunk) {
            const std::size_t lo = chunk * span, hi = std::min(m.columns.size(), lo + span);
            for (std::size_t col = lo; col < hi; ++col) {
                if (count[col] != 1) continue;
                const auto owner = static_cast<std::size_t>(owner_sum[col]);
                if (require_unit_coefficient && m.at(owner, static_cast<std::uint32_t>(col)) != 1) continue;
                found[chunk].emplace_back(owner, static_cast<std::uint32_t>(col));
            }
        });
        std::vector<std::optional<std::uint32_t>> witness(m.rows.size());
        for (const auto& part : found)
            for (const auto& [owner, col] : part)
                if (!witness[owner]) witness[owner] = col;

        EliminationRound round;
        round.index = trace.rounds.size();
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (!witness[r]) continue;
            round.eliminated.push_back({m.rows[r], m.columns[*witness[r]], m.at(r, *witness[r])});
        }
        if (round.eliminated.empty()) break;
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            if (!witness[r]) continue;
            alive[r] = 0;
            --remaining;
            for (const auto& [col, c] : m.entries[r]) {
                --count[col];
                owner_sum[col] -= r;
            }
        }
        trace.rounds.push_back(std::move(round));
    }
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        if (alive[r]) trace.leftover.push_back(m.rows[r]);
    return trace;
}

inline EliminationTrace eliminate(const Rectangle& rect, bool require_unit_coefficient, int jobs = 1,
                                  ExpansionCache* cache = nullptr) {
    return eliminate(build_product_matrix(rect, jobs, cache), require_unit_coefficient, jobs);
}

/// True iff round 0 removed exactly the (almost) self-complementary pairs.
inline bool check_W0_characterization(const EliminationTrace& trace, const Rectangle& rect) {
    std::set<ComplementaryPair> expected;
    for (const auto& pair : complementary_pairs(rect))
        if (is_theorem_pair(pair.lambda, rect)) expected.insert(pair);
    std::set<ComplementaryPair> round0;
    if (!trace.rounds.empty())
        for (const auto& e : trace.rounds.front().eliminated) round0.insert(e.pair);
    return round0 == expected;
}

/// Recomputes every product straight from the LR engine and confirms that
/// each recorded witness occurred, with its recorded coefficient, in its
/// own product and in no other product still present at that round.
inline bool replay_trace(const EliminationTrace& trace) {
    const auto pairs = complementary_pairs(trace.rect);
    std::vector<SchurExpansion> products;
    products.reserve(pairs.size());
    for (const auto& p : pairs) products.push_back(product_expansion(p.lambda, p.lambda_c));
    std::vector<char> alive(pairs.size(), 1);
    auto index_of = [&](const ComplementaryPair& p) {
        return static_cast<std::size_t>(std::lower_bound(pairs.begin(), pairs.end(), p) - pairs.begin());
    };
    std::set<ComplementaryPair> seen;
    for (const auto& round : trace.rounds) {
        for (const auto& e : round.eliminated) {
            const auto i = index_of(e.pair);
            if (i >= pairs.size() || !(pairs[i] == e.pair) || !alive[i] || !seen.insert(e.pair).second) return false;
            if (products[i].coefficient(e.witness) != e.coefficient || e.coefficient == 0) return false;
            if (trace.require_unit_coefficient && e.coefficient != 1) return false;
            for (std::size_t j = 0; j < pairs.size(); ++j)
                if (j != i && alive[j] && products[j].contains(e.witness)) return false;
        }
        for (const auto& e : round.eliminated) alive[index_of(e.pair)] = 0;
    }
    std::size_t left = 0;
    for (char a : alive) left += a;
    return left == trace.leftover.size();
}

// ---------------------------------------------------------------------------
// Failed generalisations

struct SkewDependence {
    SchurExpansion lhs;  // s_1 · s_{21/1}
    SchurExpansion rhs;  // s_2 · s_{21/2} + s_11 · s_{21/11}
    bool holds = false;
};

inline SkewDependence skew_dependence_21() {
    const Partition outer({2, 1});
    SkewDependence d;
    d.lhs = multiply(SchurExpansion::single(Partition({1})), skew_expansion(outer, Partition({1})));
    d.rhs = multiply(SchurExpansion::single(Partition({2})), skew_expansion(outer, Partition({2})));
    d.rhs.add(multiply(SchurExpansion::single(Partition({1, 1})), skew_expansion(outer, Partition({1, 1}))));
    d.holds = d.lhs == d.rhs;
    return d;
}

/// For R = (2,1): s_1 s_{R/1} = s_2 s_{R/2} + s_11 s_{R/11}.
inline bool check_skew_dependence_21() { return skew_dependence_21().holds; }

struct CoproductCounterexample {
    std::vector<std::pair<std::string, SchurExpansion>> products;  // s3·s1, s21·s1, s2·s2, s2·s11
    bool all_contain_31 = false;
    bool dependence_holds = false;
};

inline CoproductCounterexample coproduct_counterexample() {
    CoproductCounterexample out;
    const Partition p1({1}), p2({2}), p3({3}), p21({2, 1}), p11({1, 1}), p31({3, 1});
    out.products = {{"3*1", product_expansion(p3, p1)},
                    {"2-1*1", product_expansion(p21, p1)},
                    {"2*2", product_expansion(p2, p2)},
                    {"2*1-1", product_expansion(p2, p11)}};
    out.all_contain_31 = std::all_of(out.products.begin(), out.products.end(),
                                     [&](const auto& named) { return named.second.contains(p31); });
    // (s3 + s21) s1 − s2 (s2 + s11) = 0
    SignedCombination combo;
    const int signs[] = {1, 1, -1, -1};
    for (std::size_t i = 0; i < 4; ++i) accumulate(combo, out.products[i].second, signs[i]);
    out.dependence_holds = is_zero(combo);
    return out;
}

/// All four products contain s_31, yet (s3 + s21) s1 = s2 (s2 + s11).
inline bool check_coproduct_counterexample() {
    const auto c = coproduct_counterexample();
    return c.all_contain_31 && c.dependence_holds;
}

}  // namespace compschur
