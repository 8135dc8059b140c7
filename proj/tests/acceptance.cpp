// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "chartab/commands.hpp"
#include "golden_tables.hpp"

using namespace chartab;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes; // first mismatches, shown under a failing line

    void expect(bool ok, const std::string& what) {
        if (ok)
            return;
        pass = false;
        if (notes.size() < 12)
            notes.push_back(what);
    }
};

struct Criterion {
    std::string name;
    double time_limit_seconds;
    std::function<void(Outcome&)> body;
};

SweepOptions sweep_all_cores() { return {0, Budget{}}; }

// Parity counts are shared by several criteria; compute each n once.
const ParityCounts& parity(int n) {
    static std::map<int, ParityCounts> memo;
    auto it = memo.find(n);
    if (it == memo.end())
        it = memo.emplace(n, parity_stats(n, sweep_all_cores())).first;
    return it->second;
}

std::string six_decimals(std::string_view published) {
    std::string s(published);
    const auto dot = s.find('.');
    const auto places = dot == std::string::npos ? 0 : s.size() - dot - 1;
    if (dot == std::string::npos)
        s += '.';
    return s + std::string(places < 6 ? 6 - places : 0, '0');
}

std::string str(std::uint64_t x) { return std::to_string(x); }

void table_one(Outcome& o) {
    for (int n = 1; n <= 20; ++n) {
        const auto& want = golden::even_odd[static_cast<std::size_t>(n - 1)];
        const auto& got = parity(n);
        o.expect(got.even == want.even && got.odd == want.odd,
                 "n=" + std::to_string(n) + ": got " + str(got.even) + "/" + str(got.odd) + ", want " +
                     str(want.even) + "/" + str(want.odd));
    }
}

void table_two(Outcome& o) {
    for (int n = 1; n <= 16; ++n) {
        const auto& want = golden::pos_neg[static_cast<std::size_t>(n - 1)];
        const auto got = sign_stats(n, sweep_all_cores());
        o.expect(got.positive == want.pos && got.negative == want.neg,
                 "n=" + std::to_string(n) + ": got " + str(got.positive) + "/" + str(got.negative) + ", want " +
                     str(want.pos) + "/" + str(want.neg));
    }
}

void table_three(Outcome& o) {
    for (int n = 1; n <= 14; ++n)
        for (int d = 3; d <= 7; ++d) {
            const auto want = golden::divisible[static_cast<std::size_t>(n - 1)].by_d[static_cast<std::size_t>(d - 3)];
            const auto got = count_residue_zero(n, d, sweep_all_cores());
            o.expect(got == want, "n=" + std::to_string(n) + " d=" + std::to_string(d) + ": got " + str(got) +
                                      ", want " + str(want));
        }
}

void figure_one(Outcome& o) {
    for (int n = 1; n <= 20; ++n) {
        const auto want = six_decimals(golden::even_proportion[static_cast<std::size_t>(n - 1)].value);
        const auto ratio = proportion_even(parity(n));
        const auto got = ratio.fixed(6);
        o.expect(got == want, "n=" + std::to_string(n) + ": " + ratio.numerator.str() + "/" +
                                  ratio.denominator.str() + " rounds to " + got + ", plotted " + want);
    }
}

void figure_two(Outcome& o) {
    for (int n = 1; n <= 16; ++n) {
        const auto probs = sign_probabilities(sign_stats(n, sweep_all_cores()));
        const auto want_pos = six_decimals(golden::positive_given_nonzero[static_cast<std::size_t>(n - 1)].value);
        const auto want_neg = six_decimals(golden::negative_given_nonzero[static_cast<std::size_t>(n - 1)].value);
        const auto pos = probs.positive.fixed(6);
        const auto neg = probs.negative.fixed(6);
        o.expect(pos == want_pos, "n=" + std::to_string(n) + " positive: " + probs.positive.numerator.str() + "/" +
                                      probs.positive.denominator.str() + " rounds to " + pos + ", plotted " +
                                      want_pos);
        o.expect(neg == want_neg, "n=" + std::to_string(n) + " negative: " + probs.negative.numerator.str() + "/" +
                                      probs.negative.denominator.str() + " rounds to " + neg + ", plotted " +
                                      want_neg);
    }
}

void theorem_one(Outcome& o) {
    for (int n = 1; n <= 20; ++n)
        o.expect(parity(n).even % 2 == 0, "E_" + std::to_string(n) + " = " + str(parity(n).even) + " is odd");
    StatsSource source = StatsSource::compute(sweep_all_cores());
    source.parity = [](int n) { return parity(n); };
    for (int n = 1; n <= 60; ++n) {
        const auto report = verify_theorem1(n, n <= 20, source);
        o.expect(report.passed(), "theorem report fails at n=" + std::to_string(n));
        const BigCount diff = partition_count(n) - count_self_conjugate(n);
        o.expect(diff % 2 == 0, "p_n - SC_n odd at n=" + std::to_string(n));
    }
}

void identity_chain(Outcome& o) {
    for (int n = 1; n <= 60; ++n) {
        const BigCount od = count_odd_distinct(n);
        const BigCount sc = count_self_conjugate(n);
        o.expect(od == sc, "OD_" + std::to_string(n) + " = " + od.str() + " but SC = " + sc.str());
    }
    for (int n = 1; n <= 20; ++n) {
        const auto& c = parity(n);
        const BigCount p = partition_count(n);
        const BigCount sc = count_self_conjugate(n);
        o.expect((c.odd % 2 == 0) == (sc % 2 == 0), "O_n and SC_n differ in parity at n=" + std::to_string(n));
        o.expect(BigCount(c.even) + c.odd == p * p, "E_n + O_n != p_n^2 at n=" + std::to_string(n));
    }
}

void orthogonality(Outcome& o) {
    std::size_t classes = 0;
    for (int n = 1; n <= 12; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            ++classes;
            BigCount sum = 0;
            for (const auto& v : table_column(mu))
                sum += v * v;
            o.expect(sum == centralizer_order(mu), "class " + mu.to_string() + ": sum of squares " + sum.str() +
                                                       ", centralizer " + centralizer_order(mu).str());
        }
    o.expect(classes == 271, "expected 271 classes for n <= 12, saw " + std::to_string(classes));
}

void oracle_equivalence(Outcome& o) {
    for (int n = 1; n <= 18; ++n) {
        const auto column = table_column(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        const auto rows = enumerate_partitions(n);
        for (std::size_t i = 0; i < rows.size(); ++i)
            o.expect(column[i] == character_degree(rows[i]), "degree mismatch for " + rows[i].to_string());
    }
    for (int n = 1; n <= 10; ++n) {
        const auto table = character_table(n);
        const auto rows = enumerate_partitions(n);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto cr = static_cast<std::size_t>(
                std::find(rows.begin(), rows.end(), conjugate(rows[r])) - rows.begin());
            for (std::size_t c = 0; c < rows.size(); ++c) {
                const int sign = (n - static_cast<int>(rows[c].length())) % 2 ? -1 : 1;
                o.expect(table[cr][c] == sign * table[r][c],
                         "conjugation twist fails at " + rows[r].to_string() + " on " + rows[c].to_string());
            }
        }
    }
    std::mt19937 rng(14);
    std::vector<std::vector<Partition>> by_n(15);
    for (int n = 1; n <= 14; ++n)
        by_n[static_cast<std::size_t>(n)] = enumerate_partitions(n);
    for (std::uint32_t m = 2; m <= 7; ++m)
        for (int trial = 0; trial < 500; ++trial) {
            const auto& ps = by_n[static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 14)(rng))];
            std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
            const auto& lambda = ps[pick(rng)];
            const auto& mu = ps[pick(rng)];
            CharValue exact = mn_character(lambda, mu) % m;
            if (exact < 0)
                exact += m;
            o.expect(CharValue(mn_character_mod(lambda, mu, m)) == exact,
                     "residue mismatch for " + lambda.to_string() + " on " + mu.to_string() + " mod " +
                         std::to_string(m));
        }
}

std::string all_csv(unsigned threads) {
    cli::GlobalOptions opts;
    opts.threads = threads;
    opts.cache_policy = CachePolicy::disabled;
    std::ostringstream out;
    for (int n = 1; n <= 10; ++n)
        cli::cmd_table(n, cli::TableFormat::csv, opts, out);
    for (int n = 1; n <= 14; ++n)
        cli::cmd_stats(n, {true, true, {3, 4, 5, 6, 7}}, cli::StatsFormat::csv, opts, out);
    cli::cmd_figure(cli::FigureKind::even_proportion, 14, {}, opts, out);
    cli::cmd_figure(cli::FigureKind::signs, 14, {}, opts, out);
    cli::cmd_figure(cli::FigureKind::divisibility, 14, {3, 4, 5, 6, 7}, opts, out);
    return out.str();
}

void determinism(Outcome& o) {
    const auto one = all_csv(1);
    const auto two = all_csv(2);
    const unsigned max_workers = std::max(1u, std::thread::hardware_concurrency());
    const auto many = all_csv(max_workers);
    o.expect(!one.empty(), "no CSV produced");
    o.expect(one == two, "1 vs 2 workers differ");
    o.expect(one == many, "1 vs " + std::to_string(max_workers) + " workers differ");
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"Table 1 even/odd counts, n <= 20", 600, table_one},
        {"Table 2 positive/negative counts, n <= 16", 600, table_two},
        {"Table 3 entries divisible by d = 3..7, n <= 14", 300, table_three},
        {"Figure 1 even proportion at 6 decimals, n <= 20", 600, figure_one},
        {"Figure 2 sign probabilities at 6 decimals, n <= 16", 600, figure_two},
        {"Theorem 1: E_n even (n <= 20), p_n - SC_n even (n <= 60)", 600, theorem_one},
        {"Identity chain: OD_n = SC_n (n <= 60); O_n = SC_n mod 2, E_n + O_n = p_n^2 (n <= 20)", 600,
         identity_chain},
        {"Column orthogonality against centralizer orders, n <= 12", 120, orthogonality},
        {"Oracles: hook-length degrees n <= 18, conjugation twist n <= 10, residues mod 2..7", 600,
         oracle_equivalence},
        {"CSV byte-identical for 1, 2 and max workers, n <= 14", 600, determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(outcome);
        } catch (const std::exception& e) {
            outcome.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        outcome.expect(seconds <= c.time_limit_seconds, "took " + std::to_string(seconds) + " s, limit " +
                                                            std::to_string(c.time_limit_seconds) + " s");
        std::printf("[%s] %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.name.c_str(), seconds);
        for (const auto& note : outcome.notes)
            std::printf("         %s\n", note.c_str());
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
