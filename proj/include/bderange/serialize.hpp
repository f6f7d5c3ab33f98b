#pragma once

#include <string>

#include <json.hpp>

#include "bderange/analysis.hpp"
#include "bderange/cycles.hpp"
#include "bderange/enumerate.hpp"
#include "bderange/numeric.hpp"
#include "bderange/polynomial.hpp"
#include "bderange/sturm.hpp"
#include "bderange/typeb.hpp"

namespace bderange {

using json = nlohmann::json;

// Big integers always serialize as decimal strings; coefficients leave the
// 64-bit range early.
inline json coeffs_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const Integer& c : p.coefficients()) arr.push_back(c.get_str());
    return arr;
}

inline json rational_json(const Rational& r) {
    return json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

inline json family_json(const PolynomialFamily& family) {
    json arr = json::array();
    for (int n = 0; n <= family.n_max(); ++n)
        arr.push_back(json{{"kind", kind_name(family.kind)},
                           {"n", n},
                           {"coeffs", coeffs_json(family.at(n))}});
    return arr;
}

inline std::string family_csv(const PolynomialFamily& family) {
    std::string out = "n,k,coefficient\n";
    for (int n = 0; n <= family.n_max(); ++n) {
        const auto c = family.at(n).coefficients();
        for (std::size_t k = 0; k < c.size(); ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," + c[k].get_str() + "\n";
    }
    return out;
}

inline std::string triangle_csv(const DerangementCoeffTable& table) {
    std::string out = "n,k,d_nk\n";
    for (int n = 0; n <= table.n_max(); ++n)
        for (int k = 0; k <= n; ++k)
            out += std::to_string(n) + "," + std::to_string(k) + "," + table.at(n, k).get_str() +
                   "\n";
    return out;
}

inline json histogram_json(const StatHistogram& h) {
    json counts = json::object();
    for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = c.get_str();
    return json{{"n", h.n},
                {"statistic", statistic_name(h.statistic)},
                {"derangements_only", h.restricted_to_derangements},
                {"counts", counts}};
}

inline json cycles_json(std::span<const SignedCycle> cycles) {
    json arr = json::array();
    for (const auto& c : cycles) {
        json entries = json::array();
        for (int e : c.entries()) entries.push_back(e);
        arr.push_back(entries);
    }
    return arr;
}

inline json moment_json(const MomentReport& m) {
    return json{{"n", m.n},
                {"mean_exact", rational_json(m.mean_exact)},
                {"var_exact", rational_json(m.var_exact)},
                {"mean_exact_decimal", m.mean_exact.get_d()},
                {"var_exact_decimal", m.var_exact.get_d()},
                {"mean_asymptotic_gap", rational_json(m.mean_asymptotic_gap)},
                {"mean_asymptotic_gap_decimal", m.mean_asymptotic_gap.get_d()},
                {"var_gap_paper", rational_json(m.var_gap_paper)},
                {"var_gap_paper_decimal", m.var_gap_paper.get_d()},
                {"var_gap_derived", rational_json(m.var_gap_derived)},
                {"var_gap_derived_decimal", m.var_gap_derived.get_d()},
                {"note",
                 "asymptotic variance constant: the printed -1/16 is not supported by the exact "
                 "values; the exact gaps against n/12 and n/12 - 1/16 are both reported"}};
}

inline json normality_json(const NormalityReport& r) {
    return json{{"n", r.n},
                {"sup_cdf_distance", r.sup_cdf_distance},
                {"sup_cdf_distance_midpoint", r.sup_cdf_distance_midpoint},
                {"phi_absolute_error_bound", "1e-70"}};
}

inline json interval_json(const RationalInterval& iv) {
    return json{{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}};
}

inline json isolation_json(const RootIsolation& iso) {
    json intervals = json::array();
    for (const auto& iv : iso.intervals) intervals.push_back(interval_json(iv));
    return json{{"family", iso.family},
                {"n", iso.n},
                {"multiplicity_at_zero", iso.multiplicity_at_zero},
                {"intervals", intervals}};
}

inline json spiral_json(const SpiralWitness& w) {
    json chain = json::array();
    for (const auto& [k, v] : w.chain) chain.push_back(json{{"k", k}, {"value", v.get_str()}});
    return json{{"n", w.n}, {"holds", w.holds}, {"chain", chain}};
}

}  // namespace bderange
