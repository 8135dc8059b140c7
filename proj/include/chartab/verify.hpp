#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chartab/characters.hpp"
#include "chartab/partitions.hpp"
#include "chartab/stats.hpp"

namespace chartab {

enum class CheckStatus { pass, fail, skipped };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, std::string>> witnesses; // the numbers that were compared
    std::string reason;                                         // set for skipped checks

    std::string witness(const std::string& key) const {
        for (const auto& [k, v] : witnesses)
            if (k == key)
                return v;
        return {};
    }
};

struct VerificationReport {
    int n = 0;
    std::vector<Check> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail)
                return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    void append(const VerificationReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/*
 * Where table statistics come from. The default computes them; the CLI
 * substitutes cache-backed lookups.
 */
struct StatsSource {
    std::function<ParityCounts(int)> parity;
    std::function<SignTally(int)> signs;
    std::function<ResidueTally(int, int)> residues;
    Budget budget{};

    static StatsSource compute(const SweepOptions& opts = {}) {
        return {[opts](int n) { return parity_stats(n, opts); },
                [opts](int n) { return sign_stats(n, opts); },
                [opts](int n, int d) { return residue_tally(n, d, opts); },
                opts.budget};
    }
};

namespace detail {

inline Check make_check(std::string name, bool ok, std::vector<std::pair<std::string, std::string>> witnesses) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(witnesses), {}};
}

inline Check skipped_check(std::string name, std::string reason) {
    return {std::move(name), CheckStatus::skipped, {}, std::move(reason)};
}

inline bool is_even(const BigCount& x) { return (x & 1) == 0; }

inline std::string str(const BigCount& x) { return x.str(); }
inline std::string str(std::uint64_t x) { return std::to_string(x); }

} // namespace detail

/// Even entries are even in number: p_n - SC_n always, E_n itself when direct.
inline VerificationReport verify_theorem1(int n, bool direct, const StatsSource& source = StatsSource::compute()) {
    using detail::str;
    VerificationReport report{n, {}};
    const BigCount p = partition_count(n);
    const BigCount sc = count_self_conjugate(n);
    report.checks.push_back(detail::make_check("theorem1.indirect", detail::is_even(p - sc),
                                               {{"p_n", str(p)}, {"SC_n", str(sc)}, {"p_n-SC_n", str(p - sc)}}));
    if (!direct)
        return report;
    if (n > source.budget.parity_max_n) {
        report.checks.push_back(detail::skipped_check(
            "theorem1.direct", "n exceeds parity budget " + std::to_string(source.budget.parity_max_n)));
        return report;
    }
    const ParityCounts c = source.parity(n);
    const BigCount e = c.even;
    report.checks.push_back(detail::make_check("theorem1.direct.even", detail::is_even(e), {{"E_n", str(e)}}));
    report.checks.push_back(detail::make_check("theorem1.direct.congruence",
                                               detail::is_even(e) == detail::is_even(p - sc),
                                               {{"E_n", str(e)}, {"p_n", str(p)}, {"SC_n", str(sc)}}));
    return report;
}

/// The parity chain O_n = OD_n = SC_n (mod 2), O_n + E_n = p_n^2 = p_n (mod 2).
inline VerificationReport verify_identity_chain(int n, bool direct,
                                                const StatsSource& source = StatsSource::compute()) {
    using detail::str;
    VerificationReport report{n, {}};
    const BigCount od = count_odd_distinct(n);
    const BigCount sc = count_self_conjugate(n);
    report.checks.push_back(detail::make_check("chain.od_equals_sc", od == sc, {{"OD_n", str(od)}, {"SC_n", str(sc)}}));
    if (!direct)
        return report;
    if (n > source.budget.parity_max_n) {
        report.checks.push_back(detail::skipped_check(
            "chain.direct", "n exceeds parity budget " + std::to_string(source.budget.parity_max_n)));
        return report;
    }
    const ParityCounts c = source.parity(n);
    const BigCount p = partition_count(n);
    const BigCount odd = c.odd;
    const BigCount square = p * p;
    report.checks.push_back(detail::make_check("chain.odd_matches_sc", detail::is_even(odd) == detail::is_even(sc),
                                               {{"O_n", str(odd)}, {"SC_n", str(sc)}}));
    report.checks.push_back(detail::make_check("chain.even_plus_odd", BigCount(c.even) + odd == square,
                                               {{"E_n", str(c.even)}, {"O_n", str(odd)}, {"p_n^2", str(square)}}));
    report.checks.push_back(detail::make_check("chain.square_parity", detail::is_even(square) == detail::is_even(p),
                                               {{"p_n", str(p)}, {"p_n^2", str(square)}}));
    return report;
}

/// Sum of squared column entries against the centralizer order.
inline VerificationReport verify_column_orthogonality(const Partition& mu, const Budget& budget = {}) {
    using detail::str;
    VerificationReport report{mu.size(), {}};
    const std::string name = "orthogonality" + mu.to_string();
    if (mu.size() > budget.sign_max_n) {
        report.checks.push_back(
            detail::skipped_check(name, "n exceeds exact-evaluation budget " + std::to_string(budget.sign_max_n)));
        return report;
    }
    BigCount sum = 0;
    for (const auto& v : table_column(mu))
        sum += v * v;
    const BigCount z = centralizer_order(mu);
    report.checks.push_back(detail::make_check(name, sum == z, {{"sum_squares", str(sum)}, {"z_mu", str(z)}}));
    return report;
}

/// (2/pi) * arctan(sqrt(n/2) - 1); anchored at 0 for n = 2.
inline double arctan_model(int n) {
    if (n < 2)
        throw std::domain_error("arctan model is defined for n >= 2");
    return 2.0 / std::numbers::pi * std::atan(std::sqrt(n / 2.0) - 1.0);
}

struct TrendPoint {
    int n = 0;
    Ratio observed;
    std::optional<double> model;
};

inline std::vector<TrendPoint> even_proportion_trend(int max_n, const StatsSource& source = StatsSource::compute()) {
    std::vector<TrendPoint> out;
    for (int n = 2; n <= max_n; ++n)
        out.push_back({n, proportion_even(source.parity(n)), arctan_model(n)});
    return out;
}

struct SignTrendPoint {
    int n = 0;
    Ratio positive;
    Ratio negative;
};

inline std::vector<SignTrendPoint> sign_trend(int max_n, const StatsSource& source = StatsSource::compute()) {
    std::vector<SignTrendPoint> out;
    for (int n = 1; n <= max_n; ++n) {
        const auto probs = sign_probabilities(source.signs(n));
        out.push_back({n, probs.positive, probs.negative});
    }
    return out;
}

struct DivisibilityCount {
    int n = 0;
    int d = 0;
    std::uint64_t count = 0;

    friend bool operator==(const DivisibilityCount&, const DivisibilityCount&) = default;
};

/// Entries divisible by d for n = 1..max_n, rows ordered by n then d.
inline std::vector<DivisibilityCount> general_divisibility_trend(int max_n, const std::set<int>& moduli,
                                                                 const StatsSource& source = StatsSource::compute()) {
    std::vector<DivisibilityCount> out;
    for (int n = 1; n <= max_n; ++n)
        for (int d : moduli)
            out.push_back({n, d, source.residues(n, d).counts[0]});
    return out;
}

/// Every check that applies at n, as run by the command line verifier.
inline VerificationReport verify_all(int n, bool direct, int orthogonality_max_n,
                                     const StatsSource& source = StatsSource::compute()) {
    VerificationReport report = verify_theorem1(n, direct, source);
    report.append(verify_identity_chain(n, direct, source));
    if (n <= orthogonality_max_n)
        for (const auto& mu : enumerate_partitions(n))
            report.append(verify_column_orthogonality(mu, source.budget));
    return report;
}

} // namespace chartab
