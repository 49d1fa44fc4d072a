#pragma once

#include "longknot/diagram.hpp"
#include "longknot/laurent.hpp"

#include <cstdint>
#include <vector>

namespace longknot {

/// The closure of the diagram cannot be drawn in the plane without virtual
/// crossings.
class NotRealizableError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

/// Genus of the oriented surface carried by the closed diagram (its Carter
/// surface). Faces are traced with the rotation at each crossing fixed by the
/// crossing's sign. Genus 0 means the code is realizable as a planar diagram.
int carter_genus(const ClosedGaussDiagram& d);
bool is_realizable(const ClosedGaussDiagram& d);

/// A classical link diagram given by cyclic words, one per component.
struct ClosedLinkCode {
    std::vector<Word> components;
    SignMap signs;
};

/// Conway polynomial by the skein relation C(L+) - C(L-) = z C(L0). Each
/// step switches the first crossing met from below when walking the
/// components in order from their base points; descending diagrams are
/// unlinks. Exponential, meant for desk-scale diagrams.
LaurentPoly conway_polynomial(const ClosedLinkCode& link);

/// Coefficient of z^2 in the Conway polynomial of the closure of `d`. Throws
/// NotRealizableError when the closure is not planar.
std::int64_t conway_c2(const LongGaussDiagram& d);

}  // namespace longknot
