#include "longknot/knot_table.hpp"

#include "longknot/gauss_code.hpp"

#include <stdexcept>

namespace longknot::knots {

const std::vector<NamedKnot>& table() {
    static const std::vector<NamedKnot> knots{
        {"unknot", "", true},
        {"right_trefoil", "O1(+)U2(+)O3(+)U1(+)O2(+)U3(+)", true},
        {"left_trefoil", "O1(-)U2(-)O3(-)U1(-)O2(-)U3(-)", true},
        {"figure_eight", "O1(+)U2(-)O3(-)U1(+)O4(+)U3(-)O2(-)U4(+)", true},
        {"cinquefoil", "O1(+)U2(+)O3(+)U4(+)O5(+)U1(+)O2(+)U3(+)O4(+)U5(+)", true},
        {"fly", "U1(+)O2(-)O1(+)U2(-)", false},
    };
    return knots;
}

LongGaussDiagram by_name(std::string_view name) {
    for (const NamedKnot& k : table()) {
        if (k.name == name) return parse_gauss_code(k.code);
    }
    throw std::out_of_range("no bundled knot named '" + std::string(name) + "'");
}

LongGaussDiagram unknot() { return by_name("unknot"); }
LongGaussDiagram right_trefoil() { return by_name("right_trefoil"); }
LongGaussDiagram left_trefoil() { return by_name("left_trefoil"); }
LongGaussDiagram figure_eight() { return by_name("figure_eight"); }
LongGaussDiagram cinquefoil() { return by_name("cinquefoil"); }
LongGaussDiagram fly() { return by_name("fly"); }

std::string fly_certificate_text() {
    // The saddle splits off the circle through both over-crossings; the two
    // arrows then cancel by R2 across the components.
    return "start U1(+)O2(-)O1(+)U2(-)\n"
           "event Saddle arcs=0:1,0:3 reconnect=oriented\n"
           "event R2_remove arrows=1,2\n"
           "event Death component=1\n"
           "end \n"
           "counts births=0 saddles=1 deaths=1\n";
}

}  // namespace longknot::knots
