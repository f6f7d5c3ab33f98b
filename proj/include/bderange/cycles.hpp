#pragma once

#include <algorithm>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"
#include "bderange/signed_permutation.hpp"

namespace bderange {

// A cycle of a signed permutation, written as the signed values s_1...s_k
// with sigma_{|s_i|} = s_{i+1} and s_{k+1} = s_1. Canonical rotation: s_1 is
// the minimum entry in integer order (which realizes the order
// bar(n) < ... < bar(1) < 1 < ... < n).
class SignedCycle {
public:
    explicit SignedCycle(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("SignedCycle: empty");
        std::vector<int> abs_seen;
        for (int e : entries_) {
            if (e == 0) throw std::invalid_argument("SignedCycle: zero entry");
            abs_seen.push_back(std::abs(e));
        }
        std::sort(abs_seen.begin(), abs_seen.end());
        if (std::adjacent_find(abs_seen.begin(), abs_seen.end()) != abs_seen.end())
            throw std::invalid_argument("SignedCycle: repeated absolute value");
        if (*std::min_element(entries_.begin(), entries_.end()) != entries_.front())
            throw std::invalid_argument("SignedCycle: first entry is not the minimum");
    }

    int length() const { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const { return entries_; }
    int entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }  // 0-based
    int min_entry() const { return entries_.front(); }

    int min_support() const {
        int m = std::abs(entries_.front());
        for (int e : entries_) m = std::min(m, std::abs(e));
        return m;
    }

    bool is_singleton() const { return entries_.size() == 1; }
    bool is_negative_singleton() const { return entries_.size() == 1 && entries_[0] < 0; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(entries_[i]);
        }
        out += ')';
        return out;
    }

    bool operator==(const SignedCycle&) const = default;

private:
    std::vector<int> entries_;
};

inline std::string cycles_str(std::span<const SignedCycle> cycles) {
    std::string out;
    for (const auto& c : cycles) out += c.str();
    return out;
}

// s_1 < ... < s_i > ... > s_k for some peak i; a singleton is unimodal
// exactly when its entry is negative.
inline bool is_unimodal(const SignedCycle& c) {
    const auto e = c.entries();
    const int k = static_cast<int>(e.size());
    if (k == 1) return e[0] < 0;
    int p = 0;
    while (p + 1 < k && e[static_cast<std::size_t>(p)] < e[static_cast<std::size_t>(p + 1)]) ++p;
    for (int i = p; i + 1 < k; ++i)
        if (!(e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(i + 1)])) return false;
    return true;
}

namespace detail {
// Peak index (0-based) of a unimodal cycle.
inline int peak_index(std::span<const int> e) {
    int p = 0;
    while (p + 1 < static_cast<int>(e.size()) &&
           e[static_cast<std::size_t>(p)] < e[static_cast<std::size_t>(p + 1)])
        ++p;
    return p;
}
}  // namespace detail

// Unimodal with, in addition, s_{i-1} < s_k at the peak i. When the peak is
// the last entry the chain is read literally, which makes strictly
// increasing cycles prime.
inline bool is_prime(const SignedCycle& c) {
    const auto e = c.entries();
    if (e.size() == 1) return e[0] < 0;
    if (!is_unimodal(c)) return false;
    const int p = detail::peak_index(e);
    return e[static_cast<std::size_t>(p - 1)] < e.back();
}

// exc_B of the partial map the cycle induces on its support: position
// |s_t| maps to s_{t+1}, so |s_t| is an excedance iff s_{t+1} = -|s_t| or
// s_{t+2} > s_{t+1} (indices cyclic).
inline int cycle_exc_b(const SignedCycle& c) {
    const auto e = c.entries();
    const int k = static_cast<int>(e.size());
    int count = 0;
    for (int t = 0; t < k; ++t) {
        const int next = e[static_cast<std::size_t>((t + 1) % k)];
        const int next2 = e[static_cast<std::size_t>((t + 2) % k)];
        if (next == -std::abs(e[static_cast<std::size_t>(t)]) || next2 > next) ++count;
    }
    return count;
}

struct CycleDecomposition {
    std::vector<SignedCycle> cycles;
    std::string str() const { return cycles_str(cycles); }
};

namespace detail {
// Sort key for listing cycles in "decreasing order of their minimum
// elements": a 1-cycle ranks by its letter, a longer cycle by its minimum
// signed entry. This is the unique total order that reproduces the
// canonical sequences required by the splitting algorithms below and keeps
// the derangement-to-prime-cycles map injective.
inline int cycle_order_key(const SignedCycle& c) {
    return c.is_singleton() ? std::abs(c.min_entry()) : c.min_entry();
}
}  // namespace detail

inline CycleDecomposition cycle_decompose(const SignedPermutation& sigma) {
    const auto v = sigma.values();
    const int n = sigma.size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<SignedCycle> cycles;
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int min_entry = v[static_cast<std::size_t>(start - 1)];
        int len = 0;
        for (int p = start; !seen[static_cast<std::size_t>(p)];
             p = std::abs(v[static_cast<std::size_t>(p - 1)])) {
            seen[static_cast<std::size_t>(p)] = true;
            min_entry = std::min(min_entry, v[static_cast<std::size_t>(p - 1)]);
            ++len;
        }
        std::vector<int> entries;
        entries.reserve(static_cast<std::size_t>(len));
        entries.push_back(min_entry);
        while (static_cast<int>(entries.size()) < len)
            entries.push_back(v[static_cast<std::size_t>(std::abs(entries.back()) - 1)]);
        cycles.emplace_back(std::move(entries));
    }
    std::sort(cycles.begin(), cycles.end(), [](const SignedCycle& a, const SignedCycle& b) {
        return detail::cycle_order_key(a) > detail::cycle_order_key(b);
    });
    return CycleDecomposition{std::move(cycles)};
}

// Rebuilds the one-line form; the inverse of cycle_decompose. The supports
// must partition [n].
inline SignedPermutation permutation_from_cycles(std::span<const SignedCycle> cycles, int n) {
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (const auto& c : cycles) {
        const auto e = c.entries();
        const int k = static_cast<int>(e.size());
        for (int t = 0; t < k; ++t) {
            const int pos = std::abs(e[static_cast<std::size_t>(t)]);
            if (pos > n) throw std::invalid_argument("cycle entry outside [n]");
            int& slot = values[static_cast<std::size_t>(pos - 1)];
            if (slot != 0) throw std::invalid_argument("cycle supports overlap");
            slot = e[static_cast<std::size_t>((t + 1) % k)];
        }
    }
    for (int x : values)
        if (x == 0) throw std::invalid_argument("cycle supports do not cover [n]");
    return SignedPermutation(std::move(values));
}

namespace detail {

[[noreturn]] inline void algorithm_bug(const std::string& what) {
    throw std::logic_error("cycle split internal error: " + what);
}

}  // namespace detail

// Splits a cycle into unimodal cycles. Step 2 takes the largest i with
// s_{i-1} > s_i < s_{i+1} and the unique j > i with s_j > s_i > s_{j+1},
// reading s_{k+1} = s_1, then recurses on s_1..s_{i-1} s_{j+1}..s_k with
// s_i..s_j split off.
inline std::vector<SignedCycle> u_algorithm(const SignedCycle& c) {
    if (c.length() == 1 || is_unimodal(c)) return {c};
    const auto e = c.entries();
    const int k = static_cast<int>(e.size());
    const auto at = [&](int t) { return e[static_cast<std::size_t>(t % k)]; };  // cyclic, 0-based
    int i = -1;
    for (int cand = 1; cand + 1 <= k; ++cand)
        if (at(cand - 1) > at(cand) && at(cand) < at(cand + 1)) i = cand;
    if (i < 0) detail::algorithm_bug("no interior local minimum in a non-unimodal cycle");
    int j = -1;
    for (int cand = i + 1; cand <= k - 1; ++cand) {
        if (at(cand) > at(i) && at(i) > at(cand + 1)) {
            if (j >= 0) detail::algorithm_bug("splitting index j is not unique");
            j = cand;
        }
    }
    if (j < 0) detail::algorithm_bug("splitting index j not found");
    std::vector<int> left(e.begin(), e.begin() + i);
    left.insert(left.end(), e.begin() + j + 1, e.end());
    SignedCycle split(std::vector<int>(e.begin() + i, e.begin() + j + 1));
    if (!is_unimodal(split)) detail::algorithm_bug("split cycle is not unimodal");
    std::vector<SignedCycle> out = u_algorithm(SignedCycle(std::move(left)));
    out.push_back(std::move(split));
    return out;
}

// Splits a unimodal cycle into prime cycles. Step 2 takes the smallest j
// admitting i > 1 with s_j > s_i > s_{j+1} > s_{i-1}; for that j the paired
// i is the unique ascent position with s_{i-1} < s_{j+1} < s_i.
inline std::vector<SignedCycle> v_algorithm(const SignedCycle& c) {
    if (!is_unimodal(c)) throw std::invalid_argument("v_algorithm: input cycle is not unimodal");
    if (is_prime(c)) return {c};
    const auto e = c.entries();
    const int k = static_cast<int>(e.size());
    int j = -1;
    for (int cand = 0; cand + 1 < k && j < 0; ++cand)
        for (int i = 1; i <= cand; ++i)
            if (e[static_cast<std::size_t>(cand)] > e[static_cast<std::size_t>(i)] &&
                e[static_cast<std::size_t>(i)] > e[static_cast<std::size_t>(cand + 1)] &&
                e[static_cast<std::size_t>(cand + 1)] > e[static_cast<std::size_t>(i - 1)]) {
                j = cand;
                break;
            }
    if (j < 0) detail::algorithm_bug("no admissible split in a non-prime unimodal cycle");
    const int cut = e[static_cast<std::size_t>(j + 1)];
    const int p = detail::peak_index(e);
    int i = -1;
    for (int cand = 1; cand <= p; ++cand)
        if (e[static_cast<std::size_t>(cand - 1)] < cut && cut < e[static_cast<std::size_t>(cand)]) {
            if (i >= 0) detail::algorithm_bug("paired index i is not unique");
            i = cand;
        }
    if (i < 0 || i > j) detail::algorithm_bug("paired index i not found for smallest j");
    std::vector<int> left(e.begin(), e.begin() + i);
    left.insert(left.end(), e.begin() + j + 1, e.end());
    SignedCycle split(std::vector<int>(e.begin() + i, e.begin() + j + 1));
    if (!is_prime(split)) detail::algorithm_bug("split cycle is not prime");
    std::vector<SignedCycle> out = v_algorithm(SignedCycle(std::move(left)));
    out.push_back(std::move(split));
    return out;
}

// Image of a derangement under V o U: a sequence of prime cycles (negative
// singletons allowed) whose supports partition [n]. The weight exponent is
// the total excedance, which equals exc_B of the input.
struct PDecomposition {
    std::vector<SignedCycle> cycles;

    std::vector<int> composition() const {
        std::vector<int> lengths;
        lengths.reserve(cycles.size());
        for (const auto& c : cycles) lengths.push_back(c.length());
        return lengths;
    }

    int weight_exponent() const {
        int w = 0;
        for (const auto& c : cycles) w += cycle_exc_b(c);
        return w;
    }

    std::string str() const { return cycles_str(cycles); }

    bool operator==(const PDecomposition&) const = default;
};

inline std::vector<SignedCycle> u_stage(const CycleDecomposition& decomposition) {
    std::vector<SignedCycle> out;
    for (const auto& c : decomposition.cycles) {
        auto parts = u_algorithm(c);
        out.insert(out.end(), std::make_move_iterator(parts.begin()),
                   std::make_move_iterator(parts.end()));
    }
    return out;
}

inline PDecomposition p_decompose(const SignedPermutation& sigma) {
    if (!is_derangement_b(sigma))
        throw std::invalid_argument("p_decompose: input has fixed points");
    PDecomposition out;
    for (const auto& u : u_stage(cycle_decompose(sigma))) {
        auto primes = v_algorithm(u);
        out.cycles.insert(out.cycles.end(), std::make_move_iterator(primes.begin()),
                          std::make_move_iterator(primes.end()));
    }
    return out;
}

// ---- fixed-point reduction --------------------------------------------------

// (S, T, sigma): S the non-fixed positions, T the fixed positions, sigma the
// derangement obtained by deleting fixed points and relabeling the surviving
// values to [|S|] in an order-preserving way on absolute values.
struct Reduction {
    std::vector<int> non_fixed;  // S, ascending
    std::vector<int> fixed;      // T, ascending
    SignedPermutation reduced;
};

inline Reduction reduce_fixed_points(const SignedPermutation& pi) {
    const auto v = pi.values();
    Reduction r;
    std::vector<int> survivors;  // values at non-fixed positions, in position order
    for (int i = 1; i <= pi.size(); ++i) {
        const int s = v[static_cast<std::size_t>(i - 1)];
        if (s == i) {
            r.fixed.push_back(i);
        } else {
            r.non_fixed.push_back(i);
            survivors.push_back(s);
        }
    }
    // rank the surviving absolute values: j-th smallest |value| becomes +-j
    std::vector<int> abs_sorted;
    abs_sorted.reserve(survivors.size());
    for (int s : survivors) abs_sorted.push_back(std::abs(s));
    std::sort(abs_sorted.begin(), abs_sorted.end());
    std::vector<int> reduced_values;
    reduced_values.reserve(survivors.size());
    for (int s : survivors) {
        const int rank = static_cast<int>(std::lower_bound(abs_sorted.begin(), abs_sorted.end(),
                                                           std::abs(s)) -
                                          abs_sorted.begin()) +
                         1;
        reduced_values.push_back(s < 0 ? -rank : rank);
    }
    r.reduced = SignedPermutation(std::move(reduced_values));
    return r;
}

// Inverse of reduce_fixed_points. Rejects triples that are not a valid
// reduction: S and T must partition [n] and the reduced permutation must be
// a derangement of [|S|].
inline SignedPermutation expand(const Reduction& r) {
    const int n = static_cast<int>(r.non_fixed.size() + r.fixed.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    const auto mark = [&](int x) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("expand: S and T do not partition [n]");
        seen[static_cast<std::size_t>(x)] = true;
    };
    for (int x : r.non_fixed) mark(x);
    for (int x : r.fixed) mark(x);
    if (r.reduced.size() != static_cast<int>(r.non_fixed.size()))
        throw std::invalid_argument("expand: reduced size differs from |S|");
    if (!is_derangement_b(r.reduced))
        throw std::invalid_argument("expand: reduced permutation has a fixed point");
    if (!std::is_sorted(r.non_fixed.begin(), r.non_fixed.end()) ||
        !std::is_sorted(r.fixed.begin(), r.fixed.end()))
        throw std::invalid_argument("expand: S and T must be ascending");

    std::vector<int> values(static_cast<std::size_t>(n), 0);
    for (int t : r.fixed) values[static_cast<std::size_t>(t - 1)] = t;
    const auto rv = r.reduced.values();
    for (std::size_t idx = 0; idx < r.non_fixed.size(); ++idx) {
        const int s = rv[idx];
        const int original = r.non_fixed[static_cast<std::size_t>(std::abs(s) - 1)];
        values[static_cast<std::size_t>(r.non_fixed[idx] - 1)] = s < 0 ? -original : original;
    }
    return SignedPermutation(std::move(values));
}

// Total weight over all P-decompositions of type (1^k, l_1,...,l_m) on an
// n-set with the singleton supports fixed:
//   q^k * multinomial(l_1+...+l_m; l_1,...,l_m) * prod 2^{l_i}(q+...+q^{l_i-1}).
// The binomial choice of the k singleton supports is folded in by the caller.
inline IntPolynomial type_weight_gf(int singletons, std::span<const int> parts, int n) {
    if (singletons < 0) throw std::invalid_argument("type_weight_gf: negative singleton count");
    long total = singletons;
    for (int l : parts) {
        if (l < 2) throw std::invalid_argument("type_weight_gf: cycle length below 2");
        total += l;
    }
    if (total != n) throw std::invalid_argument("type_weight_gf: composition does not sum to n");
    IntPolynomial w = IntPolynomial::monomial(multinomial(parts), static_cast<std::size_t>(singletons));
    for (int l : parts)
        w = w * (IntPolynomial::q_run(static_cast<std::size_t>(l)) * pow2(static_cast<unsigned long>(l)));
    return w;
}

}  // namespace bderange
