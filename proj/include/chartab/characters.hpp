#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chartab/partitions.hpp"

namespace chartab {

/// An exact character value chi_lambda(mu).
using CharValue = boost::multiprecision::cpp_int;

struct BorderStripRemoval {
    Partition remaining;
    int height = 0; // rows met by the strip

    friend bool operator==(const BorderStripRemoval&, const BorderStripRemoval&) = default;
};

/*
 * Every rim hook of exactly r cells whose removal from lambda leaves a
 * partition. Works on the beta-set {lambda_i + len - i}: a rim hook of
 * size r is a bead sliding from b to the free position b - r, and the
 * beads it jumps over are the extra rows it covers. Results are ordered
 * by the top row of the strip, bottom row first.
 */
inline std::vector<BorderStripRemoval> border_strips(const Partition& lambda, int r) {
    if (r < 1)
        throw std::invalid_argument("border_strips: strip size must be positive");
    std::vector<BorderStripRemoval> out;
    const std::size_t len = lambda.length();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i)
        beta[i] = lambda[i] + static_cast<int>(len - 1 - i);

    auto occupied = [&](int b) {
        for (int x : beta)
            if (x == b)
                return true;
        return false;
    };

    for (std::size_t row = len; row-- > 0;) {
        const int from = beta[row];
        const int to = from - r;
        if (to < 0 || occupied(to))
            continue;
        int jumped = 0;
        std::vector<int> moved;
        moved.reserve(len);
        for (int x : beta) {
            if (x > to && x < from)
                ++jumped;
            if (x != from)
                moved.push_back(x);
        }
        // Re-insert the bead at its new position, keeping the set descending.
        auto pos = moved.begin();
        while (pos != moved.end() && *pos > to)
            ++pos;
        moved.insert(pos, to);

        std::vector<int> parts;
        parts.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            const int part = moved[i] - static_cast<int>(len - 1 - i);
            if (part > 0)
                parts.push_back(part);
        }
        out.push_back({Partition(std::move(parts)), jumped + 1});
    }
    return out;
}

enum class PeelOrder { largest_first, smallest_first };

struct MemoKey {
    Partition shape;
    std::size_t suffix_index = 0;

    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        return PartitionHash{}(k.shape) ^ (k.suffix_index * 0x9e3779b97f4a7c15ull);
    }
};

struct ExactArithmetic {
    using value_type = CharValue;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    void add(value_type& acc, const value_type& v, bool negate) const {
        if (negate)
            acc -= v;
        else
            acc += v;
    }
};

/// Arithmetic in Z/mZ with least non-negative representatives.
struct ModularArithmetic {
    using value_type = std::uint32_t;
    std::uint32_t modulus = 2;

    explicit ModularArithmetic(std::uint32_t m) : modulus(m) {
        if (m < 2)
            throw std::invalid_argument("modulus must be at least 2");
    }
    value_type zero() const { return 0; }
    value_type one() const { return 1 % modulus; }
    void add(value_type& acc, value_type v, bool negate) const {
        if (negate)
            v = v == 0 ? 0 : modulus - v;
        acc = static_cast<value_type>((static_cast<std::uint64_t>(acc) + v) % modulus);
    }
};

/*
 * Murnaghan-Nakayama evaluation of chi_lambda(mu) for a fixed class mu.
 * The memo table persists across evaluate() calls, so sweeping all
 * lambda of one column reuses subproblems; it is not thread-safe and is
 * meant to be owned by a single worker.
 */
template <class Arithmetic>
class CharacterColumn {
public:
    using value_type = typename Arithmetic::value_type;

    explicit CharacterColumn(Partition mu, Arithmetic arith = Arithmetic{},
                             PeelOrder order = PeelOrder::largest_first)
        : mu_(std::move(mu)), arith_(std::move(arith)), peel_(mu_.parts()) {
        if (order == PeelOrder::smallest_first)
            std::reverse(peel_.begin(), peel_.end());
    }

    const Partition& cycle_type() const noexcept { return mu_; }

    value_type evaluate(const Partition& lambda) {
        if (lambda.size() != mu_.size())
            throw std::invalid_argument("character of " + lambda.to_string() + " on class " + mu_.to_string() +
                                        ": sizes differ");
        return eval(lambda, 0);
    }

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    value_type eval(const Partition& shape, std::size_t idx) {
        if (idx == peel_.size())
            return arith_.one();
        MemoKey key{shape, idx};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        value_type acc = arith_.zero();
        for (const auto& strip : border_strips(shape, peel_[idx]))
            arith_.add(acc, eval(strip.remaining, idx + 1), strip.height % 2 == 0);
        memo_.emplace(std::move(key), acc);
        return acc;
    }

    Partition mu_;
    Arithmetic arith_;
    std::vector<int> peel_;
    std::unordered_map<MemoKey, value_type, MemoKeyHash> memo_;
};

inline CharValue mn_character(const Partition& lambda, const Partition& mu,
                              PeelOrder order = PeelOrder::largest_first) {
    return CharacterColumn<ExactArithmetic>(mu, ExactArithmetic{}, order).evaluate(lambda);
}

/// chi_lambda(mu) mod m in [0, m), evaluated entirely in Z/mZ.
inline std::uint32_t mn_character_mod(const Partition& lambda, const Partition& mu, std::uint32_t m) {
    return CharacterColumn<ModularArithmetic>(mu, ModularArithmetic(m)).evaluate(lambda);
}

/// Hook length formula: n! / prod of hook lengths.
inline BigCount character_degree(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    BigCount hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return factorial(lambda.size()) / hooks;
}

/// Column of the character table in enumerate_partitions order, one memo context.
inline std::vector<CharValue> table_column(const Partition& mu) {
    CharacterColumn<ExactArithmetic> column(mu);
    std::vector<CharValue> out;
    for (const auto& lambda : enumerate_partitions(mu.size()))
        out.push_back(column.evaluate(lambda));
    return out;
}

inline std::vector<std::uint32_t> table_column_mod(const Partition& mu, std::uint32_t m) {
    CharacterColumn<ModularArithmetic> column(mu, ModularArithmetic(m));
    std::vector<std::uint32_t> out;
    for (const auto& lambda : enumerate_partitions(mu.size()))
        out.push_back(column.evaluate(lambda));
    return out;
}

/// Full table indexed [row lambda][column mu], both in enumerate_partitions order.
inline std::vector<std::vector<CharValue>> character_table(int n) {
    const auto classes = enumerate_partitions(n);
    std::vector<std::vector<CharValue>> table(classes.size(), std::vector<CharValue>(classes.size()));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto column = table_column(classes[c]);
        for (std::size_t r = 0; r < column.size(); ++r)
            table[r][c] = std::move(column[r]);
    }
    return table;
}

} // namespace chartab
