#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chartab/cache.hpp"
#include "chartab/characters.hpp"
#include "chartab/partitions.hpp"
#include "chartab/stats.hpp"
#include "chartab/verify.hpp"

namespace chartab::cli {

/// A request the CLI declines to run; the message names the flag that lifts the limit.
class refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    unsigned threads = 0;
    std::optional<std::filesystem::path> cache_dir;
    CachePolicy cache_policy = CachePolicy::read_write;
    Budget budget{};
    int print_limit = 10;
    int orthogonality_max_n = 12;
    std::ostream* diag = &std::cerr;

    SweepOptions sweep() const { return {threads, budget}; }

    StatsCache make_cache() const {
        return StatsCache(cache_dir ? *cache_dir : default_cache_dir(), cache_policy, sweep(), *diag);
    }
};

inline const char* budget_flag(StatKind kind) { return kind == StatKind::signs ? "--sign-budget" : "--parity-budget"; }

[[noreturn]] inline void rethrow_as_refusal(const budget_exceeded& e) {
    throw refusal(std::string(e.what()) + "; raise it with " + budget_flag(e.kind));
}

inline std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// table ----------------------------------------------------------------

enum class TableFormat { text, csv };

inline int cmd_table(int n, TableFormat format, const GlobalOptions& opts, std::ostream& out) {
    if (n < 1)
        throw std::invalid_argument("table: n must be at least 1");
    if (n > opts.print_limit)
        throw refusal("n=" + std::to_string(n) + " exceeds the print limit (" + std::to_string(opts.print_limit) +
                      "); raise it with --print-limit");
    const auto labels = enumerate_partitions(n);
    const auto table = character_table(n);

    if (format == TableFormat::csv) {
        out << "chi";
        for (const auto& mu : labels)
            out << ',' << csv_quote(mu.to_string());
        out << '\n';
        for (std::size_t r = 0; r < labels.size(); ++r) {
            out << csv_quote(labels[r].to_string());
            for (const auto& v : table[r])
                out << ',' << v;
            out << '\n';
        }
        return 0;
    }

    std::vector<std::size_t> width(labels.size() + 1, 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        width[0] = std::max(width[0], labels[i].to_string().size());
        width[i + 1] = labels[i].to_string().size();
    }
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c + 1] = std::max(width[c + 1], row[c].str().size());
    auto cell = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };

    cell("", width[0]);
    for (std::size_t c = 0; c < labels.size(); ++c) {
        out << "  ";
        cell(labels[c].to_string(), width[c + 1]);
    }
    out << '\n';
    for (std::size_t r = 0; r < labels.size(); ++r) {
        cell(labels[r].to_string(), width[0]);
        for (std::size_t c = 0; c < labels.size(); ++c) {
            out << "  ";
            cell(table[r][c].str(), width[c + 1]);
        }
        out << '\n';
    }
    return 0;
}

// stats ----------------------------------------------------------------

enum class StatsFormat { csv, json };

struct StatsRequest {
    bool parity = false;
    bool signs = false;
    std::set<int> moduli;

    bool empty() const { return !parity && !signs && moduli.empty(); }
};

inline int cmd_stats(int n, StatsRequest request, StatsFormat format, const GlobalOptions& opts, std::ostream& out) {
    if (request.empty())
        request.parity = true;
    auto cache = opts.make_cache();
    const BigCount p = partition_count(n);
    const BigCount entries = p * p;
    std::optional<ParityCounts> parity;
    std::optional<SignTally> signs;
    std::vector<ResidueTally> residues;
    try {
        if (request.parity)
            parity = cache.parity(n);
        if (request.signs)
            signs = cache.signs(n);
        for (int d : request.moduli)
            residues.push_back(cache.residues(n, d));
    } catch (const budget_exceeded& e) {
        rethrow_as_refusal(e);
    }

    if (format == StatsFormat::json) {
        nlohmann::json doc{{"n", n}, {"p_n", p.str()}, {"entries", entries.str()}};
        if (parity)
            doc["parity"] = {{"evens", parity->even},
                             {"odds", parity->odd},
                             {"prop_even", proportion_even(*parity).fixed(6)}};
        if (signs)
            doc["signs"] = {{"pos", signs->positive}, {"neg", signs->negative}, {"zero", signs->zero}};
        if (!residues.empty()) {
            doc["residues"] = nlohmann::json::array();
            for (const auto& t : residues)
                doc["residues"].push_back({{"d", t.modulus}, {"count_div", t.counts[0]}, {"counts", t.counts}});
        }
        out << doc.dump(2) << '\n';
        return 0;
    }

    bool first = true;
    auto block = [&](const char* header) {
        if (!first)
            out << '\n';
        first = false;
        out << header << '\n';
    };
    if (parity) {
        block("n,p_n,entries,evens,odds,prop_even");
        out << n << ',' << p << ',' << entries << ',' << parity->even << ',' << parity->odd << ','
            << proportion_even(*parity).fixed(6) << '\n';
    }
    if (signs) {
        block("n,pos,neg,zero");
        out << n << ',' << signs->positive << ',' << signs->negative << ',' << signs->zero << '\n';
    }
    if (!residues.empty()) {
        block("n,d,count_div");
        for (const auto& t : residues)
            out << n << ',' << t.modulus << ',' << t.counts[0] << '\n';
    }
    return 0;
}

// verify ---------------------------------------------------------------

enum class VerifyFormat { text, json };

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json w = nlohmann::json::object();
        for (const auto& [k, v] : c.witnesses)
            w[k] = v;
        nlohmann::json j{{"name", c.name}, {"status", to_string(c.status)}, {"witnesses", w}};
        if (!c.reason.empty())
            j["reason"] = c.reason;
        checks.push_back(std::move(j));
    }
    return {{"n", r.n}, {"overall", r.passed() ? "pass" : "fail"}, {"checks", checks}};
}

/// Exit status is 1 iff some check failed.
inline int cmd_verify(int max_n_direct, int max_n_indirect, VerifyFormat format, const GlobalOptions& opts,
                      std::ostream& out) {
    auto cache = opts.make_cache();
    const auto source = cache.source();
    const int top = std::max(max_n_direct, max_n_indirect);
    bool all_pass = true;
    nlohmann::json reports = nlohmann::json::array();
    for (int n = 1; n <= top; ++n) {
        const auto report = verify_all(n, n <= max_n_direct, opts.orthogonality_max_n, source);
        all_pass = all_pass && report.passed();
        if (format == VerifyFormat::json) {
            reports.push_back(to_json(report));
            continue;
        }
        std::size_t skipped = 0;
        for (const auto& c : report.checks)
            skipped += c.status == CheckStatus::skipped ? 1 : 0;
        out << "n=" << n << ' ' << (report.passed() ? "pass" : "FAIL") << " (" << report.checks.size()
            << " checks, " << skipped << " skipped)\n";
        for (const auto& c : report.checks) {
            // Orthogonality columns are summarized unless something is off.
            if (c.name.rfind("orthogonality", 0) == 0 && c.status == CheckStatus::pass)
                continue;
            out << "  " << to_string(c.status) << ' ' << c.name;
            for (const auto& [k, v] : c.witnesses)
                out << ' ' << k << '=' << v;
            if (!c.reason.empty())
                out << " (" << c.reason << ')';
            out << '\n';
        }
    }
    if (format == VerifyFormat::json)
        out << reports.dump(2) << '\n';
    return all_pass ? 0 : 1;
}

// figure ---------------------------------------------------------------

enum class FigureKind { even_proportion, signs, divisibility };

inline int cmd_figure(FigureKind which, int max_n, const std::set<int>& moduli, const GlobalOptions& opts,
                      std::ostream& out) {
    auto cache = opts.make_cache();
    const auto source = cache.source();
    try {
        switch (which) {
        case FigureKind::even_proportion:
            out << "n,observed,model\n";
            for (const auto& pt : even_proportion_trend(max_n, source))
                out << pt.n << ',' << pt.observed.fixed(6) << ',' << fixed6(*pt.model) << '\n';
            break;
        case FigureKind::signs:
            out << "n,positive,negative\n";
            for (const auto& pt : sign_trend(max_n, source))
                out << pt.n << ',' << pt.positive.fixed(6) << ',' << pt.negative.fixed(6) << '\n';
            break;
        case FigureKind::divisibility:
            out << "n,d,observed\n";
            for (const auto& row : general_divisibility_trend(max_n, moduli, source)) {
                const BigCount p = partition_count(row.n);
                out << row.n << ',' << row.d << ',' << Ratio(BigCount(row.count), p * p).fixed(6) << '\n';
            }
            break;
        }
    } catch (const budget_exceeded& e) {
        rethrow_as_refusal(e);
    }
    return 0;
}

} // namespace chartab::cli
