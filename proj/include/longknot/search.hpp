#pragma once

#include "longknot/diagram.hpp"
#include "longknot/move_event.hpp"

#include <optional>
#include <vector>

namespace longknot {

struct SearchOptions {
    std::size_t max_arrows = 4;   ///< states with more arrows are not visited
    std::size_t max_steps = 3;    ///< maximum path length
    bool band_pass = false;       ///< also use band-pass moves
    std::size_t max_states = 500000;
    unsigned threads = 0;         ///< 0 = hardware concurrency
};

struct SearchResult {
    /// A replay-verified path from a to b, or empty when none was found
    /// within the bounds. Not finding one means "unknown", never "different".
    std::optional<std::vector<MoveEvent>> path;
    std::size_t states_visited = 0;
    bool truncated = false;  ///< stopped by max_states rather than max_steps
};

/// Breadth-first search over Reidemeister moves (and optionally band-pass).
/// Diagrams are compared after renumbering.
SearchResult search_equivalence(const LongGaussDiagram& a, const LongGaussDiagram& b,
                                const SearchOptions& options);

std::optional<std::vector<MoveEvent>> bounded_equivalence(const LongGaussDiagram& a,
                                                          const LongGaussDiagram& b,
                                                          std::size_t max_arrows,
                                                          std::size_t max_steps);

}  // namespace longknot
