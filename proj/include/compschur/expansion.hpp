#pragma once

// Sparse Schur-basis vectors with arbitrary-precision coefficients.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "compschur/partition.hpp"

namespace compschur {

using BigInt = boost::multiprecision::cpp_int;

/// A nonnegative combination Σ c_ν s_ν. Zero terms are never stored and every
/// key has the same size (the degree). Iteration is graded-lex ascending.
class SchurExpansion {
public:
    using Terms = std::map<Partition, BigInt>;

    SchurExpansion() = default;

    static SchurExpansion single(const Partition& nu) {
        SchurExpansion e;
        e.add(nu, 1);
        return e;
    }

    void add(const Partition& nu, const BigInt& coeff) {
        if (coeff < 0) throw std::invalid_argument("negative coefficient in SchurExpansion");
        if (coeff == 0) return;
        if (!terms_.empty() && terms_.begin()->first.size() != nu.size())
            throw std::invalid_argument("SchurExpansion terms must share one degree");
        terms_[nu] += coeff;
    }

    void add(const SchurExpansion& other) {
        for (const auto& [nu, c] : other.terms_) add(nu, c);
    }

    BigInt coefficient(const Partition& nu) const {
        const auto it = terms_.find(nu);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    bool contains(const Partition& nu) const { return terms_.count(nu) != 0; }
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.size();
    }

    const Terms& terms() const noexcept { return terms_; }
    Terms::const_iterator begin() const noexcept { return terms_.begin(); }
    Terms::const_iterator end() const noexcept { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    BigInt total_mass() const {
        BigInt sum = 0;
        for (const auto& [nu, c] : terms_) sum += c;
        return sum;
    }

    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    /// `2-2:1,3-1:1,4:1`
    std::string to_string() const {
        std::string out;
        for (const auto& [nu, c] : terms_) {
            if (!out.empty()) out += ',';
            out += nu.to_string() + ':' + c.str();
        }
        return out;
    }

private:
    Terms terms_;
};

/// Signed integer combination of Schur functions, used where cancellation
/// has to be checked exactly.
using SignedCombination = std::map<Partition, BigInt>;

inline void accumulate(SignedCombination& into, const SchurExpansion& e, const BigInt& scale) {
    for (const auto& [nu, c] : e.terms()) {
        auto& slot = into[nu];
        slot += scale * c;
        if (slot == 0) into.erase(nu);
    }
}

inline bool is_zero(const SignedCombination& combo) {
    for (const auto& [nu, c] : combo)
        if (c != 0) return false;
    return true;
}

}  // namespace compschur
