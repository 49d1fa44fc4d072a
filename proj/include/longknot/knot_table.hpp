#pragma once

#include "longknot/diagram.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace longknot::knots {

/// A named long knot code.
struct NamedKnot {
    std::string_view name;
    std::string_view code;
    bool classical;  ///< closure is a planar diagram
};

/// Bundled codes: classical calibration knots plus the fly.
const std::vector<NamedKnot>& table();

LongGaussDiagram unknot();
LongGaussDiagram right_trefoil();
LongGaussDiagram left_trefoil();
LongGaussDiagram figure_eight();
LongGaussDiagram cinquefoil();
/// A ribbon long virtual knot with odd v22.
LongGaussDiagram fly();

/// Looks a knot up by name; throws std::out_of_range.
LongGaussDiagram by_name(std::string_view name);

/// Ribbon certificate for the fly in the line-oriented file format.
std::string fly_certificate_text();

}  // namespace longknot::knots
