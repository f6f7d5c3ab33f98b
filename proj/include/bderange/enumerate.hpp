#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"
#include "bderange/signed_permutation.hpp"

namespace bderange {

// Exhaustive enumeration is the ground-truth oracle; beyond the cap only the
// recurrence-based constructions are available. 2^9 * 9! is about 1.9e8
// elements, which is the practical desk-scale limit.
inline constexpr int kEnumerationCap = 9;

class enumeration_cap_error : public std::runtime_error {
public:
    explicit enumeration_cap_error(int n)
        : std::runtime_error("enumeration cap exceeded: n=" + std::to_string(n) +
                             " > " + std::to_string(kEnumerationCap)) {}
};

namespace detail {

// Fills positions left to right, trying candidate values in integer order,
// so visitation is lexicographic on the value sequence. The same state
// drives B_n (signed = true) and S_n (signed = false); derangements_only
// prunes sigma_i = i at the branch level.
template <typename Visitor>
void enumerate_rec(int n, int pos, std::vector<int>& current, std::vector<bool>& used,
                   bool signed_values, bool derangements_only, Visitor& visit) {
    if (pos == n) {
        visit(std::span<const int>(current));
        return;
    }
    const int lo = signed_values ? -n : 1;
    for (int cand = lo; cand <= n; ++cand) {
        if (cand == 0) continue;
        const int a = cand < 0 ? -cand : cand;
        if (used[static_cast<std::size_t>(a)]) continue;
        if (derangements_only && cand == pos + 1) continue;
        used[static_cast<std::size_t>(a)] = true;
        current[static_cast<std::size_t>(pos)] = cand;
        enumerate_rec(n, pos + 1, current, used, signed_values, derangements_only, visit);
        used[static_cast<std::size_t>(a)] = false;
    }
}

template <typename Visitor>
void for_each_values(int n, bool signed_values, bool derangements_only, Visitor&& visit) {
    if (n < 0) throw std::invalid_argument("enumeration: negative n");
    if (n > kEnumerationCap) throw enumeration_cap_error(n);
    std::vector<int> current(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    enumerate_rec(n, 0, current, used, signed_values, derangements_only, visit);
}

}  // namespace detail

// Visits every element of B_n exactly once, lexicographically on values.
// The visitor receives the value sequence of a complete signed permutation.
template <typename Visitor>
void for_each_in_group(int n, Visitor&& visit, bool derangements_only = false) {
    detail::for_each_values(n, true, derangements_only, std::forward<Visitor>(visit));
}

// Same stream over the symmetric group S_n (all-positive values).
template <typename Visitor>
void for_each_in_symmetric_group(int n, Visitor&& visit, bool derangements_only = false) {
    detail::for_each_values(n, false, derangements_only, std::forward<Visitor>(visit));
}

inline std::vector<SignedPermutation> enumerate_group(int n) {
    std::vector<SignedPermutation> out;
    for_each_in_group(n, [&](std::span<const int> v) {
        out.emplace_back(std::vector<int>(v.begin(), v.end()));
    });
    return out;
}

inline std::vector<SignedPermutation> enumerate_derangements_b(int n) {
    std::vector<SignedPermutation> out;
    for_each_in_group(
        n, [&](std::span<const int> v) { out.emplace_back(std::vector<int>(v.begin(), v.end())); },
        /*derangements_only=*/true);
    return out;
}

struct StatHistogram {
    int n = 0;
    Statistic statistic = Statistic::exc_b;
    bool restricted_to_derangements = false;
    std::map<int, Integer> counts;  // statistic value -> exact count, zeros omitted

    Integer total() const {
        Integer t = 0;
        for (const auto& [k, c] : counts) t += c;
        return t;
    }

    // Coefficient vector indexed by the statistic value.
    IntPolynomial to_polynomial() const {
        IntPolynomial p;
        for (const auto& [k, c] : counts) p += IntPolynomial::monomial(c, static_cast<std::size_t>(k));
        return p;
    }

    bool same_counts(const StatHistogram& o) const { return counts == o.counts; }
};

// Exact distribution of a statistic over B_n (or S_n for the classical
// statistics), optionally restricted to derangements.
inline StatHistogram histogram(int n, Statistic stat, bool restrict_to_derangements) {
    std::vector<std::uint64_t> buckets(static_cast<std::size_t>(n) + 2, 0);
    const auto visit = [&](std::span<const int> v) {
        ++buckets[static_cast<std::size_t>(evaluate(stat, v))];
    };
    if (is_type_a(stat))
        for_each_in_symmetric_group(n, visit, restrict_to_derangements);
    else
        for_each_in_group(n, visit, restrict_to_derangements);
    StatHistogram h{n, stat, restrict_to_derangements, {}};
    for (std::size_t k = 0; k < buckets.size(); ++k)
        if (buckets[k] != 0) h.counts[static_cast<int>(k)] = Integer(buckets[k]);
    return h;
}

}  // namespace bderange
