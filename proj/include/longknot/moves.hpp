#pragma once

#include "longknot/diagram.hpp"
#include "longknot/move_event.hpp"

#include <stdexcept>
#include <vector>

namespace longknot {

/// The event does not describe a legal move at its site in this diagram.
class IllegalMoveError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every legal application of the requested kinds. Removal moves and R3 are
/// listed at every matching site; add forms are listed for every insertion
/// arc with every sign and direction choice. BandPass sites are only listed
/// on links without circles.
std::vector<MoveEvent> enumerate_moves(const LinkGaussDiagram& l, MoveKindSet kinds);
std::vector<MoveEvent> enumerate_moves(const LongGaussDiagram& d, MoveKindSet kinds);

/// Applies one event. Throws IllegalMoveError when the site is not legal.
LinkGaussDiagram apply(const LinkGaussDiagram& l, const MoveEvent& m);
/// Reidemeister and band-pass moves only; cobordism events need a link.
LongGaussDiagram apply(const LongGaussDiagram& d, const MoveEvent& m);

/// R3 legality. The three strands are top (both endpoints Over), middle and
/// bottom (both Under); x = top/middle crossing, y = top/bottom, z =
/// middle/bottom. Each flag says which crossing comes first along that strand.
bool r3_is_legal(bool top_meets_x_first, bool middle_meets_x_first, bool bottom_meets_y_first,
                 Sign x, Sign y, Sign z);

/// Oriented saddle between two arcs. Arcs on one component split it, arcs on
/// different components merge them. Throws IllegalMoveError for crossed
/// reconnections (they are never orientation-compatible) and bad arcs.
LinkGaussDiagram saddle(const LinkGaussDiagram& l, Gap first, Gap second,
                        Reconnection reconnection = Reconnection::Oriented);

/// Adds an empty circle component at the end.
LinkGaussDiagram birth(const LinkGaussDiagram& l);

/// Removes circle component `component` (>= 1), which must carry no endpoints.
LinkGaussDiagram death(const LinkGaussDiagram& l, std::size_t component);

}  // namespace longknot
