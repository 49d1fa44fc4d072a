#pragma once

#include "longknot/diagram.hpp"
#include "longknot/move_event.hpp"

#include <array>
#include <optional>
#include <vector>

namespace longknot {

/// Local strands of a band-pass, indexed h1, h2, v1, v2. Band h (strands h1,
/// h2) runs horizontally with h1 left-to-right and h2 right-to-left; band v
/// runs vertically. Crossing c_ij = h_i over v_j.
enum class BandStrand : std::size_t { H1 = 0, H2 = 1, V1 = 2, V2 = 3 };

/// Endpoints met along each strand and the crossing signs, with band h
/// passing over band v. Arrow ids are the given c11, c12, c21, c22.
struct BandPassTemplate {
    std::array<std::array<Endpoint, 2>, 4> strands{};
    std::array<Sign, 4> signs{};
};

/// Variant 1: both bands circulate the same way; variant 2: opposite ways.
/// With h1 drawn above h2 (the generator's pictures) variant 1 has v1 running
/// up. Pictures with h1 below h2 arise after a pass and are sites too.
BandPassTemplate band_pass_template(BandPassVariant variant, const std::array<ArrowId, 4>& arrows,
                                   bool h1_on_top = true);

/// Cyclic order of the four strands along the knot, starting from h1, for
/// configurations 1..6.
const std::array<std::array<BandStrand, 4>, 6>& band_pass_configurations();

/// Throws IllegalMoveError unless the site's arrows sit in `d` exactly as the
/// variant's template, with the stated configuration and base arc.
void check_band_pass_site(const LongGaussDiagram& d, const BandPassSite& site);

/// First legal labelling of the four arrows as a band-pass site, if any.
std::optional<BandPassSite> locate_band_pass(const LongGaussDiagram& d,
                                             const std::array<ArrowId, 4>& arrows);

/// One site per set of four arrows that forms a band-pass.
std::vector<BandPassSite> find_band_pass_sites(const LongGaussDiagram& d);

/// Toggles direction and sign of the four site arrows.
LongGaussDiagram apply_band_pass(const LongGaussDiagram& d, const BandPassSite& site);

}  // namespace longknot
