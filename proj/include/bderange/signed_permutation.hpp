#pragma once

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bderange {

// One-line notation for an element of the hyperoctahedral group B_n: the
// value at position i is sigma_i, with a negative sign encoding the bar.
// The absolute values form a permutation of {1,...,n}.
class SignedPermutation {
public:
    SignedPermutation() = default;

    explicit SignedPermutation(std::vector<int> values) : values_(std::move(values)) {
        validate(values_);
    }

    static SignedPermutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return SignedPermutation(std::move(v));
    }

    // Accepts comma-separated signed decimals. A bar may be written either as
    // a leading minus or as a trailing combining macron (U+0304), so both
    // "3,-5,4" and "3,5̄,4" parse to the same permutation.
    static SignedPermutation parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }

    // 1-based position access, matching the usual sigma_i notation.
    int value_at(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }

    std::span<const int> values() const { return values_; }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    bool operator==(const SignedPermutation&) const = default;

private:
    static void validate(const std::vector<int>& v) {
        const int n = static_cast<int>(v.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int x : v) {
            const int a = std::abs(x);
            if (a < 1 || a > n)
                throw std::invalid_argument("SignedPermutation: value " + std::to_string(x) +
                                            " out of range for n=" + std::to_string(n));
            if (seen[static_cast<std::size_t>(a)])
                throw std::invalid_argument("SignedPermutation: repeated absolute value " +
                                            std::to_string(a));
            seen[static_cast<std::size_t>(a)] = true;
        }
    }

    std::vector<int> values_;
};

// ---- statistics -----------------------------------------------------------
//
// The span overloads are the hot path for exhaustive enumeration; the object
// overloads forward to them. All statistics are pure functions of the value
// sequence. Comparisons are plain integer comparisons: the order
// bar(n) < ... < bar(1) < 1 < ... < n coincides with integer order.

// |{ i : sigma_i = -i or sigma_{|sigma_i|} > sigma_i }|
inline int exc_b(std::span<const int> v) {
    const int n = static_cast<int>(v.size());
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        const int s = v[static_cast<std::size_t>(i - 1)];
        if (s == -i || v[static_cast<std::size_t>(std::abs(s) - 1)] > s) ++count;
    }
    return count;
}

// |{ i : sigma_i = i or sigma_{|sigma_i|} > sigma_i }|
inline int wexc_b(std::span<const int> v) {
    const int n = static_cast<int>(v.size());
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        const int s = v[static_cast<std::size_t>(i - 1)];
        if (s == i || v[static_cast<std::size_t>(std::abs(s) - 1)] > s) ++count;
    }
    return count;
}

// |{ i in [0, n-1] : sigma_i > sigma_{i+1} }| with sigma_0 = 0.
inline int des_b(std::span<const int> v) {
    int count = 0;
    int prev = 0;
    for (int s : v) {
        if (prev > s) ++count;
        prev = s;
    }
    return count;
}

inline int asc_b(std::span<const int> v) {
    int count = 0;
    int prev = 0;
    for (int s : v) {
        if (prev < s) ++count;
        prev = s;
    }
    return count;
}

// Classical excedance |{ i : sigma_i > i }| (intended for all-positive input).
inline int exc_a(std::span<const int> v) {
    int count = 0;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[static_cast<std::size_t>(i)] > i + 1) ++count;
    return count;
}

// Classical descent |{ i in [n-1] : sigma_i > sigma_{i+1} }|, no sigma_0.
inline int des_a(std::span<const int> v) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] > v[i + 1]) ++count;
    return count;
}

inline std::vector<int> fixed_points(std::span<const int> v) {
    std::vector<int> fp;
    for (int i = 1; i <= static_cast<int>(v.size()); ++i)
        if (v[static_cast<std::size_t>(i - 1)] == i) fp.push_back(i);
    return fp;
}

inline bool is_derangement_b(std::span<const int> v) {
    for (int i = 1; i <= static_cast<int>(v.size()); ++i)
        if (v[static_cast<std::size_t>(i - 1)] == i) return false;
    return true;
}

inline int exc_b(const SignedPermutation& s) { return exc_b(s.values()); }
inline int wexc_b(const SignedPermutation& s) { return wexc_b(s.values()); }
inline int des_b(const SignedPermutation& s) { return des_b(s.values()); }
inline int asc_b(const SignedPermutation& s) { return asc_b(s.values()); }
inline int exc_a(const SignedPermutation& s) { return exc_a(s.values()); }
inline int des_a(const SignedPermutation& s) { return des_a(s.values()); }
inline std::vector<int> fixed_points(const SignedPermutation& s) { return fixed_points(s.values()); }
inline bool is_derangement_b(const SignedPermutation& s) { return is_derangement_b(s.values()); }

enum class Statistic { exc_b, wexc_b, des_b, asc_b, exc_a, des_a };

inline int evaluate(Statistic stat, std::span<const int> v) {
    switch (stat) {
        case Statistic::exc_b: return exc_b(v);
        case Statistic::wexc_b: return wexc_b(v);
        case Statistic::des_b: return des_b(v);
        case Statistic::asc_b: return asc_b(v);
        case Statistic::exc_a: return exc_a(v);
        case Statistic::des_a: return des_a(v);
    }
    throw std::logic_error("evaluate: unknown statistic");
}

// True for the classical statistics that live on the symmetric group.
inline bool is_type_a(Statistic stat) {
    return stat == Statistic::exc_a || stat == Statistic::des_a;
}

inline const char* statistic_name(Statistic stat) {
    switch (stat) {
        case Statistic::exc_b: return "exc_b";
        case Statistic::wexc_b: return "wexc_b";
        case Statistic::des_b: return "des_b";
        case Statistic::asc_b: return "asc_b";
        case Statistic::exc_a: return "exc_a";
        case Statistic::des_a: return "des_a";
    }
    return "?";
}

inline Statistic statistic_from_name(std::string_view name) {
    if (name == "exc_b") return Statistic::exc_b;
    if (name == "wexc_b") return Statistic::wexc_b;
    if (name == "des_b") return Statistic::des_b;
    if (name == "asc_b") return Statistic::asc_b;
    if (name == "exc_a") return Statistic::exc_a;
    if (name == "des_a") return Statistic::des_a;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

inline SignedPermutation SignedPermutation::parse(std::string_view text) {
    std::vector<int> values;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    while (true) {
        skip_ws();
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        std::size_t digits = 0;
        long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) throw std::invalid_argument("permutation entry too large");
            ++pos;
            ++digits;
        }
        if (digits == 0) throw std::invalid_argument("expected integer in permutation text");
        // trailing combining macron (UTF-8 0xCC 0x84) marks a barred entry
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xCC &&
            static_cast<unsigned char>(text[pos + 1]) == 0x84) {
            negative = true;
            pos += 2;
        }
        values.push_back(negative ? -static_cast<int>(value) : static_cast<int>(value));
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',') throw std::invalid_argument("expected ',' in permutation text");
        ++pos;
    }
    return SignedPermutation(std::move(values));
}

}  // namespace bderange
