#include "longknot/moves.hpp"

#include <algorithm>

namespace longknot {

namespace {

void check_arc(const LinkGaussDiagram& l, Gap g) {
    if (g.component >= l.component_count()) {
        throw IllegalMoveError("no component " + std::to_string(g.component));
    }
    const std::size_t m = l.component(g.component).size();
    const bool ok = g.component == 0 ? g.index <= m : (m == 0 ? g.index == 0 : g.index < m);
    if (!ok) {
        throw IllegalMoveError("no arc " + std::to_string(g.component) + ":" +
                               std::to_string(g.index));
    }
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from),
                w.begin() + static_cast<std::ptrdiff_t>(to));
}

}  // namespace

LinkGaussDiagram saddle(const LinkGaussDiagram& l, Gap first, Gap second,
                        Reconnection reconnection) {
    if (reconnection == Reconnection::Crossed) {
        throw IllegalMoveError("incompatible reconnection: a crossed saddle breaks orientation");
    }
    check_arc(l, first);
    check_arc(l, second);
    if (first == second) throw IllegalMoveError("saddle needs two distinct arcs");
    if (second < first) std::swap(first, second);

    std::vector<Word> comps(l.components().begin(), l.components().end());
    if (first.component == second.component) {
        const Word w = comps[first.component];
        const std::size_t g1 = first.index;
        const std::size_t g2 = second.index;
        Word inner = slice(w, g1, g2);
        Word outer;
        if (first.component == 0) {
            outer = slice(w, 0, g1);
            const Word tail = slice(w, g2, w.size());
            outer.insert(outer.end(), tail.begin(), tail.end());
        } else {
            outer = slice(w, g2, w.size());
            const Word head = slice(w, 0, g1);
            outer.insert(outer.end(), head.begin(), head.end());
        }
        comps[first.component] = std::move(outer);
        comps.push_back(std::move(inner));
    } else {
        // Merge the higher-index circle into the lower component.
        Word circle = comps[second.component];
        std::rotate(circle.begin(), circle.begin() + static_cast<std::ptrdiff_t>(second.index),
                    circle.end());
        Word& target = comps[first.component];
        target.insert(target.begin() + static_cast<std::ptrdiff_t>(first.index), circle.begin(),
                      circle.end());
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(second.component));
    }
    return LinkGaussDiagram(std::move(comps), l.signs());
}

LinkGaussDiagram birth(const LinkGaussDiagram& l) {
    std::vector<Word> comps(l.components().begin(), l.components().end());
    comps.emplace_back();
    return LinkGaussDiagram(std::move(comps), l.signs());
}

LinkGaussDiagram death(const LinkGaussDiagram& l, std::size_t component) {
    if (component == 0) throw IllegalMoveError("the long component cannot die");
    if (component >= l.component_count()) {
        throw IllegalMoveError("no component " + std::to_string(component));
    }
    if (!l.component(component).empty()) {
        throw IllegalMoveError("component " + std::to_string(component) +
                               " still carries crossings");
    }
    std::vector<Word> comps(l.components().begin(), l.components().end());
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(component));
    return LinkGaussDiagram(std::move(comps), l.signs());
}

}  // namespace longknot
