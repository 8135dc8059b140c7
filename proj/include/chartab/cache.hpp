#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartab/partitions.hpp"
#include "chartab/stats.hpp"
#include "chartab/verify.hpp"

namespace chartab {

inline constexpr int cache_schema_version = 1;
inline constexpr const char* engine_version = "mn-memo-1";

enum class CachePolicy { read_write, disabled };

/// $CHARTAB_CACHE_DIR, then the XDG cache home, then ~/.cache/chartab.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("CHARTAB_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "chartab";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "chartab";
    return ".chartab-cache";
}

/*
 * Per-(kind, n) JSON memo of table statistics. A hit needs a matching
 * schema and engine version and a payload whose counts add up to p_n^2;
 * anything else is recomputed and rewritten. Writes go through a
 * temporary file and a rename so readers never see partial documents.
 */
class StatsCache {
public:
    StatsCache(std::filesystem::path dir, CachePolicy policy, SweepOptions opts, std::ostream& diag = std::cerr)
        : dir_(std::move(dir)), policy_(policy), opts_(opts), diag_(&diag) {}

    ParityCounts parity(int n) {
        check_budget(StatKind::parity, n, opts_.budget);
        const auto doc = load("parity", n, [](const nlohmann::json& p) {
            return p.at("even").get<std::uint64_t>() + p.at("odd").get<std::uint64_t>();
        });
        if (doc)
            return {doc->at("even").get<std::uint64_t>(), doc->at("odd").get<std::uint64_t>()};
        const auto c = parity_stats(n, opts_);
        store("parity", n, {{"even", c.even}, {"odd", c.odd}});
        return c;
    }

    SignTally signs(int n) {
        check_budget(StatKind::signs, n, opts_.budget);
        const auto doc = load("signs", n, [](const nlohmann::json& p) {
            return p.at("positive").get<std::uint64_t>() + p.at("negative").get<std::uint64_t>() +
                   p.at("zero").get<std::uint64_t>();
        });
        if (doc)
            return {doc->at("positive").get<std::uint64_t>(), doc->at("negative").get<std::uint64_t>(),
                    doc->at("zero").get<std::uint64_t>()};
        const auto t = sign_stats(n, opts_);
        store("signs", n, {{"positive", t.positive}, {"negative", t.negative}, {"zero", t.zero}});
        return t;
    }

    ResidueTally residues(int n, int d) {
        check_budget(d == 2 ? StatKind::parity : StatKind::residue, n, opts_.budget);
        const std::string kind = "residue-" + std::to_string(d);
        const auto doc = load(kind, n, [d](const nlohmann::json& p) {
            const auto counts = p.at("counts").get<std::vector<std::uint64_t>>();
            if (p.at("modulus").get<int>() != d || counts.size() != static_cast<std::size_t>(d))
                throw std::runtime_error("modulus mismatch");
            std::uint64_t total = 0;
            for (auto c : counts)
                total += c;
            return total;
        });
        if (doc) {
            ResidueTally t(d);
            t.counts = doc->at("counts").get<std::vector<std::uint64_t>>();
            return t;
        }
        const auto t = residue_tally(n, d, opts_);
        store(kind, n, {{"modulus", d}, {"counts", t.counts}});
        return t;
    }

    StatsSource source() {
        return {[this](int n) { return parity(n); }, [this](int n) { return signs(n); },
                [this](int n, int d) { return residues(n, d); }, opts_.budget};
    }

    std::filesystem::path entry_path(const std::string& kind, int n) const {
        return dir_ / (kind + "-n" + std::to_string(n) + ".json");
    }

    const SweepOptions& options() const noexcept { return opts_; }

private:
    template <class TotalFn>
    std::optional<nlohmann::json> load(const std::string& kind, int n, TotalFn payload_total) {
        if (policy_ == CachePolicy::disabled)
            return std::nullopt;
        const auto path = entry_path(kind, n);
        std::error_code ec;
        if (!std::filesystem::exists(path, ec))
            return std::nullopt;
        try {
            std::ifstream in(path);
            const auto doc = nlohmann::json::parse(in);
            if (doc.at("schema_version").get<int>() != cache_schema_version ||
                doc.at("engine_version").get<std::string>() != engine_version)
                return std::nullopt;
            if (doc.at("n").get<int>() != n || doc.at("kind").get<std::string>() != kind)
                throw std::runtime_error("entry describes a different statistic");
            const BigCount p = partition_count(n);
            if (BigCount(payload_total(doc.at("payload"))) != p * p)
                throw std::runtime_error("counts do not add up to p_n^2");
            return doc.at("payload");
        } catch (const std::exception& e) {
            *diag_ << "warning: ignoring corrupt cache entry " << path.string() << " (" << e.what()
                   << "); recomputing\n";
            return std::nullopt;
        }
    }

    void store(const std::string& kind, int n, nlohmann::json payload) {
        if (policy_ == CachePolicy::disabled)
            return;
        const auto path = entry_path(kind, n);
        nlohmann::json doc{{"schema_version", cache_schema_version},
                           {"engine_version", engine_version},
                           {"n", n},
                           {"kind", kind},
                           {"payload", std::move(payload)},
                           {"created_at", utc_timestamp()}};
        try {
            std::filesystem::create_directories(dir_);
            std::random_device rd;
            auto tmp = path;
            tmp += ".tmp" + std::to_string(rd());
            {
                std::ofstream out(tmp);
                out << doc.dump(2) << '\n';
                if (!out)
                    throw std::runtime_error("write failed");
            }
            std::filesystem::rename(tmp, path);
        } catch (const std::exception& e) {
            *diag_ << "warning: could not write cache entry " << path.string() << " (" << e.what() << ")\n";
        }
    }

    static std::string utc_timestamp() {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::filesystem::path dir_;
    CachePolicy policy_;
    SweepOptions opts_;
    std::ostream* diag_;
};

} // namespace chartab
