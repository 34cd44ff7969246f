#pragma once

// Text and JSON renderings of certificates, traces and rank reports.
// Partitions appear in their dash-separated string form throughout.

#include <limits>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "compschur/verifier.hpp"
#include "compschur/witness.hpp"

namespace compschur {

using Json = nlohmann::ordered_json;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Coefficients are written as JSON numbers when they fit, strings otherwise.
inline Json coefficient_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return Json(static_cast<std::uint64_t>(v));
    return Json(v.str());
}

inline Json to_json(const SchurExpansion& e) {
    Json terms = Json::array();
    for (const auto& [nu, c] : e) terms.push_back({{"nu", nu.to_string()}, {"coefficient", coefficient_json(c)}});
    return terms;
}

inline Json to_json(const ComplementaryPair& p) {
    return {{"lambda", p.lambda.to_string()}, {"lambda_c", p.lambda_c.to_string()}};
}

inline Json to_json(const WitnessCertificate& c) {
    return {{"rect", c.rect.to_string()},
            {"lambda", c.pair.lambda.to_string()},
            {"lambda_c", c.pair.lambda_c.to_string()},
            {"witness", c.witness.to_string()},
            {"coefficient", coefficient_json(c.coefficient)},
            {"method", to_string(c.method)}};
}

inline Json to_json(const EliminationTrace& t) {
    Json rounds = Json::array();
    for (const auto& round : t.rounds) {
        Json eliminated = Json::array();
        for (const auto& e : round.eliminated)
            eliminated.push_back({{"lambda", e.pair.lambda.to_string()},
                                  {"lambda_c", e.pair.lambda_c.to_string()},
                                  {"witness", e.witness.to_string()},
                                  {"coeff", coefficient_json(e.coefficient)}});
        rounds.push_back({{"i", round.index}, {"eliminated", std::move(eliminated)}});
    }
    Json leftover = Json::array();
    for (const auto& p : t.leftover) leftover.push_back(to_json(p));
    return {{"rect", t.rect.to_string()}, {"rounds", std::move(rounds)}, {"leftover", std::move(leftover)}, {"status", t.status()}};
}

inline Json to_json(const RankReport& r) {
    return {{"rect", r.rect.to_string()}, {"rows", r.rows}, {"rank", r.rank}, {"prime", r.prime}, {"certified", r.certified}};
}

inline std::string pair_text(const ComplementaryPair& p) { return p.lambda.to_string() + " | " + p.lambda_c.to_string(); }

inline void write_text(std::ostream& out, const WitnessCertificate& c) {
    out << c.rect << "  " << pair_text(c.pair) << "  witness " << c.witness << "  coefficient " << c.coefficient
        << "  " << to_string(c.method) << '\n';
}

inline void write_text(std::ostream& out, const EliminationTrace& t) {
    for (const auto& round : t.rounds) {
        out << "round " << round.index << ": " << round.eliminated.size() << " eliminated\n";
        for (const auto& e : round.eliminated)
            out << "  " << pair_text(e.pair) << "  witness " << e.witness << "  coefficient " << e.coefficient << '\n';
    }
    out << "leftover " << t.leftover.size() << '\n';
    for (const auto& p : t.leftover) out << "  " << pair_text(p) << '\n';
    out << "status " << t.status() << '\n';
}

inline void write_text(std::ostream& out, const RankReport& r) {
    out << r.rect << "  rank " << r.rank << '/' << r.rows;
    if (r.certified && r.prime) out << "  mod " << r.prime;
    if (r.exact_checked) out << "  exact";
    out << (r.certified ? "  certified" : "  NOT certified") << '\n';
}

}  // namespace compschur
