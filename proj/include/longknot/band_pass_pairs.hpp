#pragma once

#include "longknot/diagram.hpp"
#include "longknot/move_event.hpp"

#include <cstdint>
#include <vector>

namespace longknot {

/// One of the 5 x 4 x 2 ways to close a band-pass picture into a long knot.
struct ConfigCase {
    int configuration = 1;  ///< 1..5
    int base_arc = 1;       ///< 1..4
    BandPassVariant variant = BandPassVariant::First;
};

/// All 40 cases in lexicographic order.
std::vector<ConfigCase> all_config_cases();

struct BandPassPair {
    LongGaussDiagram before;
    LongGaussDiagram after;
    BandPassSite site;
};

/// Builds the closed-up band-pass picture for `c` with arrows c11..c22 = 1..4
/// and `extra_arrows` random arrows 5, 6, ... whose endpoints fall on the
/// connecting arcs, then applies the band-pass. Deterministic per seed.
/// Throws std::invalid_argument on an out-of-range case.
BandPassPair generate_band_pass_pair(const ConfigCase& c, std::size_t extra_arrows,
                                     std::uint64_t seed);

}  // namespace longknot
