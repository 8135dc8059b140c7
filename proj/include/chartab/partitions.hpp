#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chartab {

/// Exact non-negative counts (p_n, n!, centralizer orders).
using BigCount = boost::multiprecision::cpp_int;

/*
 * A partition of n: weakly decreasing positive parts summing to n.
 * The empty partition is the unique partition of 0. Instances are
 * validated on construction and immutable afterwards.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into canonical order first.
    static Partition from_unsorted(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Largest part, 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; enumerate_partitions yields descending order.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : p)
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

/// All partitions of n in reverse-lexicographic order, from (n) down to (1^n).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty())
            break;
        int k = a.back() - 1;
        a.back() = k;
        int rem = ones + 1;
        while (rem >= k) {
            a.push_back(k);
            rem -= k;
        }
        if (rem > 0)
            a.push_back(rem);
    }
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
    for (int part : lambda)
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// Diagonal hook lengths of a self-conjugate partition: parts 2(lambda_i - i) + 1.
inline Partition sc_to_odd_distinct(const Partition& lambda) {
    if (!is_self_conjugate(lambda))
        throw std::invalid_argument("sc_to_odd_distinct: " + lambda.to_string() + " is not self-conjugate");
    std::vector<int> out;
    for (std::size_t i = 1; i <= lambda.length() && static_cast<int>(i) <= lambda[i - 1]; ++i)
        out.push_back(2 * (lambda[i - 1] - static_cast<int>(i)) + 1);
    return Partition(std::move(out));
}

inline bool has_distinct_odd_parts(const Partition& mu) {
    for (std::size_t i = 0; i < mu.length(); ++i) {
        if (mu[i] % 2 == 0)
            return false;
        if (i > 0 && mu[i] == mu[i - 1])
            return false;
    }
    return true;
}

/// Inverse of sc_to_odd_distinct: each odd part 2k+1 becomes a symmetric hook of arm and leg k.
inline Partition odd_distinct_to_sc(const Partition& mu) {
    if (!has_distinct_odd_parts(mu))
        throw std::invalid_argument("odd_distinct_to_sc: " + mu.to_string() + " does not have distinct odd parts");
    const int durfee = static_cast<int>(mu.length());
    std::vector<int> rows;
    for (int i = 1; i <= durfee; ++i)
        rows.push_back(i + (mu[static_cast<std::size_t>(i - 1)] - 1) / 2);
    // Below the Durfee square, row j is column j of the square's rows.
    for (int j = durfee + 1; durfee > 0 && j <= rows.front(); ++j) {
        int len = 0;
        for (int i = 0; i < durfee; ++i)
            len += rows[static_cast<std::size_t>(i)] >= j ? 1 : 0;
        if (len == 0)
            break;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

/// p_0, ..., p_n by Euler's pentagonal-number recurrence.
inline std::vector<BigCount> partition_counts(int n) {
    if (n < 0)
        throw std::invalid_argument("partition_counts: n must be non-negative");
    std::vector<BigCount> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigCount acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const int g2 = k * (3 * k + 1) / 2;
            BigCount term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                term += p[static_cast<std::size_t>(m - g2)];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

inline BigCount partition_count(int n) { return partition_counts(n).back(); }

/// OD_n: partitions of n into distinct odd parts, by 0/1 knapsack over the odd parts.
inline BigCount count_odd_distinct(int n) {
    if (n < 0)
        throw std::invalid_argument("count_odd_distinct: n must be non-negative");
    std::vector<BigCount> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (int part = 1; part <= n; part += 2)
        for (int s = n; s >= part; --s)
            ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    return ways[static_cast<std::size_t>(n)];
}

/*
 * SC_n by Durfee-square decomposition: a self-conjugate partition with a
 * k x k Durfee square is that square plus a mirrored pair of copies of a
 * partition with parts <= k, so SC_n = sum_k q((n - k^2) / 2, k) where
 * q(m, k) counts partitions of m into parts of size at most k. This route
 * never touches odd parts, which keeps it independent of count_odd_distinct.
 */
inline BigCount count_self_conjugate(int n) {
    if (n < 0)
        throw std::invalid_argument("count_self_conjugate: n must be non-negative");
    const int half = n / 2;
    // bounded[m] = q(m, k) for the current k.
    std::vector<BigCount> bounded(static_cast<std::size_t>(half) + 1);
    bounded[0] = 1;
    BigCount total = 0;
    for (int k = 1; k * k <= n; ++k) {
        for (int s = k; s <= half; ++s)
            bounded[static_cast<std::size_t>(s)] += bounded[static_cast<std::size_t>(s - k)];
        const int rest = n - k * k;
        if (rest % 2 == 0)
            total += bounded[static_cast<std::size_t>(rest / 2)];
    }
    if (n == 0)
        total = 1;
    return total;
}

/// A partition read as the cycle periods of a permutation.
struct CycleType {
    Partition underlying;
    std::map<int, int> multiplicities; // period -> m_p, only nonzero entries

    int n() const noexcept { return underlying.size(); }

    int multiplicity(int period) const {
        auto it = multiplicities.find(period);
        return it == multiplicities.end() ? 0 : it->second;
    }

    static CycleType from_multiplicities(const std::map<int, int>& mult) {
        std::vector<int> parts;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
            if (it->first < 1 || it->second < 0)
                throw std::invalid_argument("cycle multiplicities need positive periods and non-negative counts");
            parts.insert(parts.end(), static_cast<std::size_t>(it->second), it->first);
        }
        CycleType ct{Partition(std::move(parts)), {}};
        for (auto [p, m] : mult)
            if (m > 0)
                ct.multiplicities[p] = m;
        return ct;
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type_multiplicities(const Partition& mu) {
    CycleType ct{mu, {}};
    for (int p : mu)
        ++ct.multiplicities[p];
    return ct;
}

inline BigCount factorial(int n) {
    BigCount r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// z_mu = prod_p p^{m_p} m_p!; 1 for the empty partition.
inline BigCount centralizer_order(const Partition& mu) {
    BigCount z = 1;
    for (auto [p, m] : cycle_type_multiplicities(mu).multiplicities)
        z *= boost::multiprecision::pow(BigCount(p), static_cast<unsigned>(m)) * factorial(m);
    return z;
}

inline BigCount class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

} // namespace chartab
