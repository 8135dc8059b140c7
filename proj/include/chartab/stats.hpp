#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chartab/characters.hpp"
#include "chartab/partitions.hpp"

namespace chartab {

/// Entry counts per residue class mod d.
struct ResidueTally {
    int modulus = 2;
    std::vector<std::uint64_t> counts;

    ResidueTally() : ResidueTally(2) {}
    explicit ResidueTally(int d) : modulus(d) {
        if (d < 2)
            throw std::invalid_argument("residue tally modulus must be at least 2");
        counts.assign(static_cast<std::size_t>(d), 0);
    }

    void add(std::uint32_t residue) { ++counts.at(residue); }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto c : counts)
            t += c;
        return t;
    }

    friend bool operator==(const ResidueTally&, const ResidueTally&) = default;
};

struct SignTally {
    std::uint64_t positive = 0;
    std::uint64_t negative = 0;
    std::uint64_t zero = 0;

    void add(const CharValue& v) {
        if (v > 0)
            ++positive;
        else if (v < 0)
            ++negative;
        else
            ++zero;
    }

    std::uint64_t total() const { return positive + negative + zero; }

    friend bool operator==(const SignTally&, const SignTally&) = default;
};

inline ResidueTally merge_tallies(const ResidueTally& a, const ResidueTally& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("cannot merge residue tallies mod " + std::to_string(a.modulus) + " and mod " +
                                    std::to_string(b.modulus));
    ResidueTally out(a.modulus);
    for (std::size_t i = 0; i < out.counts.size(); ++i)
        out.counts[i] = a.counts[i] + b.counts[i];
    return out;
}

inline SignTally merge_tallies(const SignTally& a, const SignTally& b) {
    return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
}

enum class StatKind { parity, signs, residue };

inline const char* to_string(StatKind k) {
    switch (k) {
    case StatKind::parity: return "parity";
    case StatKind::signs: return "signs";
    case StatKind::residue: return "residue";
    }
    return "?";
}

/// Largest n each statistic will attempt; parity and residue sweeps share a limit.
struct Budget {
    int parity_max_n = 26;
    int sign_max_n = 20;

    int limit_for(StatKind k) const { return k == StatKind::signs ? sign_max_n : parity_max_n; }
};

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(StatKind kind, int requested, int limit)
        : std::runtime_error("n=" + std::to_string(requested) + " exceeds the " + to_string(kind) +
                             " budget (max n = " + std::to_string(limit) + ")"),
          kind(kind), requested(requested), limit(limit) {}

    StatKind kind;
    int requested;
    int limit;
};

struct SweepOptions {
    unsigned threads = 0; // 0: hardware concurrency
    Budget budget{};

    unsigned worker_count() const {
        if (threads > 0)
            return threads;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

inline void check_budget(StatKind kind, int n, const Budget& budget) {
    if (n < 1)
        throw std::invalid_argument("table statistics need n >= 1");
    if (n > budget.limit_for(kind))
        throw budget_exceeded(kind, n, budget.limit_for(kind));
}

/*
 * Runs column_fn(mu, local_tally) for every class mu of S_n. Workers pull
 * columns from a shared counter and keep private tallies that are merged
 * at the end; since merging is a commutative sum, the result does not
 * depend on the worker count or scheduling.
 */
template <class Tally, class ColumnFn>
Tally sweep_columns(int n, unsigned workers, const Tally& identity, ColumnFn column_fn) {
    const auto classes = enumerate_partitions(n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(classes.size())));
    std::vector<Tally> locals(workers, identity);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&](unsigned w) {
        try {
            for (std::size_t c = next++; c < classes.size(); c = next++)
                column_fn(classes[c], locals[w]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
    }
    if (failure)
        std::rethrow_exception(failure);

    Tally total = identity;
    for (const auto& t : locals)
        total = merge_tallies(total, t);
    return total;
}

/// Residues mod d of all p_n^2 entries.
inline ResidueTally residue_tally(int n, int d, const SweepOptions& opts = {}) {
    check_budget(d == 2 ? StatKind::parity : StatKind::residue, n, opts.budget);
    return sweep_columns(n, opts.worker_count(), ResidueTally(d), [d](const Partition& mu, ResidueTally& tally) {
        for (auto v : table_column_mod(mu, static_cast<std::uint32_t>(d)))
            tally.add(v);
    });
}

struct ParityCounts {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

inline ParityCounts parity_stats(int n, const SweepOptions& opts = {}) {
    const auto tally = residue_tally(n, 2, opts);
    return {tally.counts[0], tally.counts[1]};
}

inline std::uint64_t count_residue_zero(int n, int d, const SweepOptions& opts = {}) {
    return residue_tally(n, d, opts).counts[0];
}

inline SignTally sign_stats(int n, const SweepOptions& opts = {}) {
    check_budget(StatKind::signs, n, opts.budget);
    return sweep_columns(n, opts.worker_count(), SignTally{}, [](const Partition& mu, SignTally& tally) {
        for (const auto& v : table_column(mu))
            tally.add(v);
    });
}

/// Exact non-negative rational with fixed-point reporting.
struct Ratio {
    BigCount numerator = 0;
    BigCount denominator = 1;

    Ratio() = default;
    Ratio(BigCount num, BigCount den) : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator == 0)
            throw std::domain_error("ratio with zero denominator");
    }

    double to_double() const { return numerator.convert_to<double>() / denominator.convert_to<double>(); }

    /// Decimal string with `digits` places, rounded half to even.
    std::string fixed(unsigned digits = 6) const {
        BigCount scale = boost::multiprecision::pow(BigCount(10), digits);
        BigCount scaled = numerator * scale;
        BigCount q = scaled / denominator;
        BigCount r = scaled % denominator;
        if (2 * r > denominator || (2 * r == denominator && (q & 1) != 0))
            ++q;
        std::string whole = BigCount(q / scale).str();
        std::string frac = BigCount(q % scale).str();
        if (digits == 0)
            return whole;
        return whole + "." + std::string(digits - frac.size(), '0') + frac;
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.numerator * b.denominator == b.numerator * a.denominator;
    }
};

inline Ratio proportion_even(const ParityCounts& c) { return {BigCount(c.even), BigCount(c.even) + c.odd}; }

inline Ratio proportion_even(int n, const SweepOptions& opts = {}) { return proportion_even(parity_stats(n, opts)); }

struct SignProbabilities {
    Ratio positive; // Prob(chi > 0 | chi != 0)
    Ratio negative; // Prob(chi < 0 | chi != 0)
};

inline SignProbabilities sign_probabilities(const SignTally& t) {
    const BigCount nonzero = BigCount(t.positive) + t.negative;
    if (nonzero == 0)
        throw std::domain_error("sign probabilities undefined: every entry is zero");
    return {{BigCount(t.positive), nonzero}, {BigCount(t.negative), nonzero}};
}

inline SignProbabilities sign_probabilities(int n, const SweepOptions& opts = {}) {
    return sign_probabilities(sign_stats(n, opts));
}

/// Everything known about one table; optional parts are filled on request.
struct TableStats {
    int n = 0;
    BigCount partitions = 0;
    BigCount entries = 0;
    std::optional<ParityCounts> parity;
    std::optional<SignTally> signs;
    std::map<int, ResidueTally> residues;
    double seconds = 0.0;

    /// Cross-checks between the independently gathered tallies.
    bool consistent() const {
        if (parity && BigCount(parity->even) + parity->odd != entries)
            return false;
        if (signs && BigCount(signs->total()) != entries)
            return false;
        for (const auto& [d, tally] : residues) {
            if (BigCount(tally.total()) != entries)
                return false;
            if (d == 2 && parity && (tally.counts[0] != parity->even || tally.counts[1] != parity->odd))
                return false;
        }
        return true;
    }
};

inline TableStats table_stats(int n, bool want_parity, bool want_signs, const std::vector<int>& moduli,
                              const SweepOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    TableStats s;
    s.n = n;
    s.partitions = partition_count(n);
    s.entries = s.partitions * s.partitions;
    if (want_parity)
        s.parity = parity_stats(n, opts);
    if (want_signs)
        s.signs = sign_stats(n, opts);
    for (int d : moduli)
        s.residues.emplace(d, residue_tally(n, d, opts));
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

} // namespace chartab
