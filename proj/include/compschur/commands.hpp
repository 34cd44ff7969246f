#pragma once

// The command-line verbs, callable in-process. Each returns the process exit
// code: 0 success, 1 a failed or stuck outcome, 2 malformed input.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "compschur/cache.hpp"
#include "compschur/report.hpp"
#include "compschur/verifier.hpp"
#include "compschur/witness.hpp"

namespace compschur {

enum class Format { Text, Json };

struct RunConfig {
    std::string command;
    std::vector<std::string> args;  // positional tokens: two partitions, or one rectangle
    std::optional<std::string> word;
    std::string cache_dir;
    int jobs = 1;
    std::vector<std::uint64_t> primes;
    Format format = Format::Text;
    bool require_unit_coefficient = false;
    std::string out;
};

/// Malformed user input; maps to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Partition partition_arg(const std::string& token) {
    try {
        return Partition::parse(token);
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid partition '" + token + "': " + e.what());
    }
}

inline Rectangle rect_arg(const std::string& token) {
    try {
        return Rectangle::parse(token);
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid rectangle '" + token + "': " + e.what());
    }
}

inline Word word_arg(const std::string& token, const Rectangle& rect) {
    Word w;
    try {
        w = Word::parse(token);
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid word '" + token + "': " + e.what());
    }
    try {
        require_signature(w, rect);
    } catch (const std::invalid_argument& e) {
        throw UsageError("word '" + token + "' does not fit " + rect.to_string() + ": " + e.what());
    }
    return w;
}

inline void check_primes(const std::vector<std::uint64_t>& primes) {
    for (auto p : primes)
        if (p <= kMinModulus || !is_prime(p))
            throw UsageError("invalid prime '" + std::to_string(p) + "': must be a prime above 2^20");
}

inline void need_args(const RunConfig& cfg, std::size_t n) {
    if (cfg.args.size() != n)
        throw UsageError(cfg.command + " expects " + std::to_string(n) + " argument(s), got " + std::to_string(cfg.args.size()));
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Signature words for the theorem pairs of a rectangle.
inline std::vector<Word> theorem_words(const Rectangle& rect) { return Word::all(rect.rows / 2, rect.cols / 2); }

}  // namespace detail

inline int cmd_expand(const Partition& lambda, const Partition& mu, const RunConfig& cfg, std::ostream& out) {
    const auto e = product_expansion(lambda, mu);
    if (cfg.format == Format::Json) {
        detail::emit(out, {{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"terms", to_json(e)}});
    } else {
        for (const auto& [nu, c] : e) out << nu << ':' << c << '\n';
    }
    return 0;
}

inline int cmd_pairs(const Rectangle& rect, const RunConfig& cfg, std::ostream& out) {
    const auto pairs = complementary_pairs(rect);
    if (cfg.format == Format::Json) {
        Json list = Json::array();
        for (const auto& p : pairs) {
            auto j = to_json(p);
            j["theorem_pair"] = is_theorem_pair(p.lambda, rect);
            list.push_back(std::move(j));
        }
        detail::emit(out, {{"rect", rect.to_string()}, {"count", pairs.size()}, {"pairs", std::move(list)}});
    } else {
        for (const auto& p : pairs) out << pair_text(p) << (is_theorem_pair(p.lambda, rect) ? "  *" : "") << '\n';
        out << pairs.size() << " pairs\n";
    }
    return 0;
}

inline int cmd_witness(const Rectangle& rect, const std::optional<Word>& word, const RunConfig& cfg, std::ostream& out) {
    const auto words = word ? std::vector<Word>{*word} : detail::theorem_words(rect);
    Json list = Json::array();
    for (const auto& w : words) {
        const auto pair = word_to_selfcomplementary(w, rect);
        const auto cert = theorem_witness(pair.lambda, rect, cfg.jobs);
        if (cfg.format == Format::Json) {
            auto j = to_json(cert);
            j["word"] = w.str();
            list.push_back(std::move(j));
        } else {
            out << "word " << (w.length() ? w.str() : "-") << "  ";
            write_text(out, cert);
        }
    }
    if (cfg.format == Format::Json) detail::emit(out, word ? list.front() : list);
    return 0;
}

inline int cmd_verify_theorem(const Rectangle& rect, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Json list = Json::array();
    std::size_t count = 0;
    for (const auto& pair : complementary_pairs(rect)) {
        if (!is_theorem_pair(pair.lambda, rect)) continue;
        WitnessCertificate cert;
        try {
            cert = theorem_witness(pair.lambda, rect, cfg.jobs);
        } catch (const CertificationError& e) {
            err << "error: certification failed for " << pair_text(pair) << " in " << rect << ": " << e.what() << '\n';
            return 1;
        }
        ++count;
        if (cfg.format == Format::Json) list.push_back(to_json(cert));
        else write_text(out, cert);
    }
    if (cfg.format == Format::Json)
        detail::emit(out, {{"rect", rect.to_string()}, {"certificates", std::move(list)}, {"verified", true}});
    else
        out << count << " certificates verified\n";
    return 0;
}

inline int cmd_eliminate(const Rectangle& rect, const RunConfig& cfg, ExpansionCache* cache, std::ostream& out,
                         std::ostream& err) {
    const auto trace = eliminate(build_product_matrix(rect, cfg.jobs, cache), cfg.require_unit_coefficient, cfg.jobs);
    if (cfg.format == Format::Json) {
        detail::emit(out, to_json(trace));
    } else {
        write_text(out, trace);
        out << "round 0 is exactly the theorem pairs: " << (check_W0_characterization(trace, rect) ? "yes" : "no") << '\n';
    }
    if (!trace.emptied()) {
        err << "elimination stuck on " << rect << " with " << trace.leftover.size() << " products left\n";
        return 1;
    }
    return 0;
}

inline int cmd_rank(const Rectangle& rect, const RunConfig& cfg, ExpansionCache* cache, std::ostream& out) {
    const auto report = certify_rank(build_product_matrix(rect, cfg.jobs, cache), cfg.primes);
    if (cfg.format == Format::Json) detail::emit(out, to_json(report));
    else write_text(out, report);
    return report.certified ? 0 : 1;
}

inline int cmd_counterexamples(const RunConfig& cfg, std::ostream& out) {
    const auto skew = skew_dependence_21();
    const auto cop = coproduct_counterexample();
    const bool cop_ok = cop.all_contain_31 && cop.dependence_holds;
    if (cfg.format == Format::Json) {
        Json products = Json::object();
        for (const auto& [name, e] : cop.products) products[name] = to_json(e);
        detail::emit(out, {{"skew_dependence", {{"holds", skew.holds}, {"lhs", to_json(skew.lhs)}, {"rhs", to_json(skew.rhs)}}},
                           {"coproduct",
                            {{"all_contain_3-1", cop.all_contain_31},
                             {"dependence_holds", cop.dependence_holds},
                             {"products", std::move(products)}}},
                           {"confirmed", skew.holds && cop_ok}});
    } else {
        out << "skew dependence for R = 2-1: " << (skew.holds ? "confirmed" : "NOT confirmed") << '\n';
        out << "  s1 * s(R/1) = " << skew.lhs.to_string() << '\n';
        out << "  s2 * s(R/2) + s1-1 * s(R/1-1) = " << skew.rhs.to_string() << '\n';
        out << "coproduct counterexample: " << (cop_ok ? "confirmed" : "NOT confirmed") << '\n';
        for (const auto& [name, e] : cop.products) out << "  " << name << " = " << e.to_string() << '\n';
    }
    return skew.holds && cop_ok ? 0 : 1;
}

/// Parses the positional arguments, wires up cache and output file, and
/// dispatches.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.jobs < 1) throw UsageError("--jobs must be at least 1, got " + std::to_string(cfg.jobs));
        detail::check_primes(cfg.primes);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.out.empty()) {
            file.open(cfg.out, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open " << cfg.out << " for writing\n";
                return 1;
            }
            sink = &file;
        }

        std::optional<ExpansionCache> cache;
        if (!cfg.cache_dir.empty()) {
            cache.emplace();
            const auto stats = cache->load(cfg.cache_dir);
            if (stats.rejected_files)
                err << "warning: ignored " << stats.rejected_files << " corrupt cache file(s) in " << cfg.cache_dir << '\n';
        }
        ExpansionCache* cache_ptr = cache ? &*cache : nullptr;

        int code = 0;
        const auto& c = cfg.command;
        if (c == "expand") {
            detail::need_args(cfg, 2);
            const auto lambda = detail::partition_arg(cfg.args[0]);
            const auto mu = detail::partition_arg(cfg.args[1]);
            code = cmd_expand(lambda, mu, cfg, *sink);
        } else if (c == "counterexamples") {
            detail::need_args(cfg, 0);
            code = cmd_counterexamples(cfg, *sink);
        } else if (c == "pairs" || c == "witness" || c == "verify-theorem" || c == "eliminate" || c == "rank") {
            detail::need_args(cfg, 1);
            const auto rect = detail::rect_arg(cfg.args[0]);
            if (c == "pairs") {
                code = cmd_pairs(rect, cfg, *sink);
            } else if (c == "witness") {
                std::optional<Word> word;
                if (cfg.word) word = detail::word_arg(*cfg.word, rect);
                code = cmd_witness(rect, word, cfg, *sink);
            } else if (c == "verify-theorem") {
                code = cmd_verify_theorem(rect, cfg, *sink, err);
            } else if (c == "eliminate") {
                code = cmd_eliminate(rect, cfg, cache_ptr, *sink, err);
            } else {
                code = cmd_rank(rect, cfg, cache_ptr, *sink);
            }
        } else {
            throw UsageError("unknown command '" + c + "'");
        }

        if (cache_ptr && cache_ptr->misses() > 0) cache_ptr->save(cfg.cache_dir);
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const CertificationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace compschur
