#pragma once

// Closed-form edge bounds for C_k-free planar graphs and the inequality
// chain that takes the construction's exact edge count down to
// 3n - 6 - 6 * 3^(log2 3) * n / k^(log2 3).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckfree/construction.hpp"
#include "ckfree/errors.hpp"

namespace ckfree {

// Slack allowed on every real-valued comparison.
inline constexpr double kBoundSlack = 1e-9;

inline double log2_3() { return std::log2(3.0); }

inline double thm2_lower(double n, double k) {
    const double e = log2_3();
    return 3.0 * n - 6.0 - 6.0 * std::pow(3.0, e) * n / std::pow(k, e);
}

inline double conj1_value(double n, double k) { return 3.0 * n - 6.0 - (3.0 * n + 6.0) / k; }

// 3n - 6 - d n / k^(log2 3); d is a free parameter.
inline double conj2_form(double n, double k, double d) {
    return 3.0 * n - 6.0 - d * n / std::pow(k, log2_3());
}

// Slope of the linear lower bound for k >= 11; the additive constant is
// not known in closed form and is never included.
inline double lan_song_slope(std::uint64_t k) {
    if (k < 11) throw DomainError("the linear lower bound needs k >= 11");
    const double kk = static_cast<double>(k);
    const double floor_term = static_cast<double>((k - 1) / 2);
    return 3.0 - (3.0 - 2.0 / (kk - 2.0)) / (kk - 6.0 + floor_term);
}

struct InequalityChain {
    double exact_edges = 0;  // 3n - 6 - (s - 1)
    double by_blocks = 0;    // 3n - 6 - 2(n - 2) / (3^i + 1)
    double by_log = 0;       // 3n - 6 - 6(n - 2) / (3^(log2(k/3)) + 3)
    double lower = 0;        // thm2_lower(n, k)
    bool link_blocks = false;
    bool link_log = false;
    bool link_lower = false;

    bool holds() const { return link_blocks && link_log && link_lower; }
};

inline InequalityChain verify_inequality_chain(std::uint64_t n, std::uint64_t k) {
    const BlockPlan p = block_plan(n, k);
    const double nn = static_cast<double>(n), kk = static_cast<double>(k);
    InequalityChain c;
    c.exact_edges = static_cast<double>(3 * n - 6 - (p.blocks - 1));
    c.by_blocks = 3.0 * nn - 6.0 - 2.0 * (nn - 2.0) / (static_cast<double>(*checked_pow3(p.level)) + 1.0);
    c.by_log = 3.0 * nn - 6.0 - 6.0 * (nn - 2.0) / (std::pow(3.0, std::log2(kk / 3.0)) + 3.0);
    c.lower = thm2_lower(nn, kk);
    c.link_blocks = c.exact_edges >= c.by_blocks - kBoundSlack;
    c.link_log = c.by_blocks >= c.by_log - kBoundSlack;
    c.link_lower = c.by_log >= c.lower - kBoundSlack;
    return c;
}

struct BoundsRow {
    std::uint64_t n = 0, k = 0;
    unsigned level = 0;
    std::uint64_t blocks = 0;
    std::uint64_t exact_edges = 0;
    std::uint64_t three_n_minus_6 = 0;
    double thm2_lower = 0;
    double conj1 = 0;
    std::optional<double> lan_song_slope;  // absent for k < 11
    InequalityChain chain;
};

inline BoundsRow bounds_row(std::uint64_t n, std::uint64_t k) {
    const BlockPlan p = block_plan(n, k);
    BoundsRow r;
    r.n = n;
    r.k = k;
    r.level = p.level;
    r.blocks = p.blocks;
    r.exact_edges = 3 * n - 6 - (p.blocks - 1);
    r.three_n_minus_6 = 3 * n - 6;
    r.thm2_lower = thm2_lower(static_cast<double>(n), static_cast<double>(k));
    r.conj1 = conj1_value(static_cast<double>(n), static_cast<double>(k));
    if (k >= 11) r.lan_song_slope = lan_song_slope(k);
    r.chain = verify_inequality_chain(n, k);
    return r;
}

// Rows over k in [k_min, k_max] and the given n values, sorted by (k, n).
// Pairs below the construction's minimum order are skipped.
inline std::vector<BoundsRow> bounds_table(std::uint64_t k_min, std::uint64_t k_max,
                                           std::vector<std::uint64_t> ns) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    std::vector<BoundsRow> rows;
    for (std::uint64_t k = k_min; k <= k_max; ++k) {
        const std::uint64_t min_n = moon_moser_order(choose_level(k));
        for (std::uint64_t n : ns)
            if (n >= min_n) rows.push_back(bounds_row(n, k));
    }
    return rows;
}

struct ReferenceBound {
    std::string forbidden;  // e.g. "C_4", "Theta_5"
    std::string formula;
    std::uint64_t valid_from;  // smallest n the bound is stated for
    double value;
    bool applies;
};

// Known upper bounds for small forbidden subgraphs, as context lines.
inline std::vector<ReferenceBound> reference_upper_bounds(std::uint64_t n) {
    if (n < 4) throw DomainError("reference bounds need n >= 4");
    const double x = static_cast<double>(n);
    std::vector<ReferenceBound> out{
        {"C_4", "(15n-30)/7", 4, (15 * x - 30) / 7, false},
        {"C_5", "(12n-33)/5", 11, (12 * x - 33) / 5, false},
        {"Theta_4", "(12n-24)/5", 4, (12 * x - 24) / 5, false},
        {"Theta_5", "(5n-10)/2", 5, (5 * x - 10) / 2, false},
        {"C_6", "(5n-14)/2", 18, (5 * x - 14) / 2, false},
    };
    for (auto& b : out) b.applies = n >= b.valid_from;
    return out;
}

}  // namespace ckfree
