#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "ckfree/bounds.hpp"

namespace ckfree {

inline constexpr const char* kBoundsCsvHeader = "n,k,i,s,exact_edges,thm2_lower,conj1,lan_song_slope,chain_ok";

inline std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// lan_song_slope is left empty for k < 11.
inline void write_bounds_csv(const std::vector<BoundsRow>& rows, std::ostream& out) {
    out << kBoundsCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.level << ',' << r.blocks << ',' << r.exact_edges << ','
            << format_fixed6(r.thm2_lower) << ',' << format_fixed6(r.conj1) << ','
            << (r.lan_song_slope ? format_fixed6(*r.lan_song_slope) : std::string{}) << ','
            << (r.chain.holds() ? "true" : "false") << '\n';
    }
}

}  // namespace ckfree
