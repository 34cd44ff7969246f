#pragma once

// Memo of product expansions, optionally persisted as text files.
//
// On disk there is one file per degree, `deg<N>.lrcache`, holding one record
// per line:
//
//     λ;μ;ν1:c1,ν2:c2,...
//
// with (λ, μ) in canonical order (graded-lex smaller first) and terms sorted
// graded-lex. The last line is `#checksum <16 hex digits>`, the FNV-1a 64
// hash of every byte before it. A file whose checksum or records do not
// parse is ignored, so its entries are simply recomputed.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <utility>

#include "compschur/expansion.hpp"
#include "compschur/lr.hpp"

namespace compschur {

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    return out;
}

/// Parses `ν1:c1,ν2:c2,...`.
inline SchurExpansion parse_expansion(std::string_view text) {
    SchurExpansion out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const auto term = text.substr(pos, comma - pos);
        const auto colon = term.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("bad expansion term '" + std::string(term) + "'");
        const auto digits = term.substr(colon + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad coefficient in '" + std::string(term) + "'");
        const BigInt coeff{std::string(digits)};
        if (coeff == 0) throw std::invalid_argument("zero coefficient in '" + std::string(term) + "'");
        out.add(Partition::parse(term.substr(0, colon)), coeff);
        pos = comma + 1;
    }
    return out;
}

class ExpansionCache {
public:
    using Key = std::pair<Partition, Partition>;

    static Key canonical(const Partition& lambda, const Partition& mu) {
        return mu < lambda ? Key{mu, lambda} : Key{lambda, mu};
    }

    /// Cached s_λ·s_μ, computing and storing it on a miss.
    SchurExpansion expand(const Partition& lambda, const Partition& mu) {
        Key key = canonical(lambda, mu);
        {
            std::shared_lock lock(guard_);
            if (auto it = entries_.find(key); it != entries_.end()) {
                ++hits_;
                return it->second;
            }
        }
        SchurExpansion value = product_expansion(key.first, key.second);
        std::unique_lock lock(guard_);
        ++misses_;
        entries_.emplace(std::move(key), value);
        return value;
    }

    void insert(const Partition& lambda, const Partition& mu, SchurExpansion value) {
        std::unique_lock lock(guard_);
        entries_.insert_or_assign(canonical(lambda, mu), std::move(value));
    }

    std::size_t size() const {
        std::shared_lock lock(guard_);
        return entries_.size();
    }
    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

    struct LoadStats {
        std::size_t files = 0;
        std::size_t records = 0;
        std::size_t rejected_files = 0;
    };

    /// Reads every deg<N>.lrcache in `dir`. Corrupt files are skipped whole.
    LoadStats load(const std::filesystem::path& dir) {
        LoadStats stats;
        if (!std::filesystem::is_directory(dir)) return stats;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            const auto name = entry.path().filename().string();
            if (name.rfind("deg", 0) != 0 || entry.path().extension() != ".lrcache") continue;
            ++stats.files;
            std::map<Key, SchurExpansion> parsed;
            if (!read_file(entry.path(), parsed)) {
                ++stats.rejected_files;
                continue;
            }
            stats.records += parsed.size();
            std::unique_lock lock(guard_);
            for (auto& [key, value] : parsed) entries_.insert_or_assign(key, std::move(value));
        }
        return stats;
    }

    /// Writes all entries, one file per degree, replacing existing files.
    void save(const std::filesystem::path& dir) const {
        std::filesystem::create_directories(dir);
        std::map<int, std::string> bodies;
        {
            std::shared_lock lock(guard_);
            for (const auto& [key, value] : entries_)
                bodies[key.first.size() + key.second.size()] += record(key, value) + '\n';
        }
        for (const auto& [degree, body] : bodies) {
            const auto target = dir / file_name(degree);
            const auto tmp = dir / (file_name(degree) + ".tmp");
            {
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                out << body << "#checksum " << hex64(fnv1a64(body)) << '\n';
                if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            }
            std::filesystem::rename(tmp, target);
        }
    }

    static std::string file_name(int degree) { return "deg" + std::to_string(degree) + ".lrcache"; }

    static std::string record(const Key& key, const SchurExpansion& value) {
        return key.first.to_string() + ';' + key.second.to_string() + ';' + value.to_string();
    }

private:
    static bool read_file(const std::filesystem::path& path, std::map<Key, SchurExpansion>& out) {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string text = buffer.str();
        const auto marker = text.rfind("#checksum ");
        if (marker == std::string::npos || (marker != 0 && text[marker - 1] != '\n')) return false;
        const std::string body = text.substr(0, marker);
        std::string stated = text.substr(marker + 10);
        while (!stated.empty() && (stated.back() == '\n' || stated.back() == '\r')) stated.pop_back();
        if (stated != hex64(fnv1a64(body))) return false;
        try {
            std::istringstream lines(body);
            std::string line;
            while (std::getline(lines, line)) {
                const auto a = line.find(';');
                const auto b = a == std::string::npos ? a : line.find(';', a + 1);
                if (b == std::string::npos) return false;
                const Partition lambda = Partition::parse(std::string_view(line).substr(0, a));
                const Partition mu = Partition::parse(std::string_view(line).substr(a + 1, b - a - 1));
                SchurExpansion value = parse_expansion(std::string_view(line).substr(b + 1));
                if (value.degree() != lambda.size() + mu.size()) return false;
                out.insert_or_assign(canonical(lambda, mu), std::move(value));
            }
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    mutable std::shared_mutex guard_;
    std::map<Key, SchurExpansion> entries_;
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
};

}  // namespace compschur
