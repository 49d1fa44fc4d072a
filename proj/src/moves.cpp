#include "longknot/moves.hpp"

#include "longknot/band_pass.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace longknot {

namespace {

using Components = std::vector<Word>;

struct EndpointPositions {
    Position over;
    Position under;
};

std::map<ArrowId, EndpointPositions> locate_endpoints(const Components& comps) {
    std::map<ArrowId, EndpointPositions> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            const Endpoint& e = comps[c][i];
            (e.role == Role::Over ? out[e.arrow].over : out[e.arrow].under) = Position{c, i};
        }
    }
    return out;
}

std::optional<Position> next_position(const Components& comps, Position p) {
    const std::size_t m = comps[p.component].size();
    if (p.index + 1 < m) return Position{p.component, p.index + 1};
    if (p.component != 0 && m >= 2) return Position{p.component, 0};
    return std::nullopt;
}

std::optional<Position> previous_position(const Components& comps, Position p) {
    const std::size_t m = comps[p.component].size();
    if (p.index > 0) return Position{p.component, p.index - 1};
    if (p.component != 0 && m >= 2) return Position{p.component, m - 1};
    return std::nullopt;
}

bool adjacent(const Components& comps, Position a, Position b) {
    return next_position(comps, a) == b || next_position(comps, b) == a;
}

const Endpoint& at(const Components& comps, Position p) { return comps[p.component][p.index]; }

bool valid_position(const Components& comps, Position p) {
    return p.component < comps.size() && p.index < comps[p.component].size();
}

void check_gap(const Components& comps, Gap g) {
    if (g.component >= comps.size()) {
        throw IllegalMoveError("no component " + std::to_string(g.component));
    }
    const std::size_t m = comps[g.component].size();
    const bool ok = g.component == 0 ? g.index <= m : (m == 0 ? g.index == 0 : g.index < m);
    if (!ok) {
        throw IllegalMoveError("no arc " + std::to_string(g.component) + ":" +
                               std::to_string(g.index));
    }
}

std::vector<Gap> all_gaps(const Components& comps) {
    std::vector<Gap> out;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::size_t m = comps[c].size();
        const std::size_t count = c == 0 ? m + 1 : std::max<std::size_t>(m, 1);
        for (std::size_t i = 0; i < count; ++i) out.push_back(Gap{c, i});
    }
    return out;
}

void erase_positions(Components& comps, std::vector<Position> positions) {
    std::sort(positions.begin(), positions.end());
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        Word& w = comps[it->component];
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(it->index));
    }
}

void insert_block(Components& comps, Gap g, const Word& block) {
    Word& w = comps[g.component];
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(g.index), block.begin(), block.end());
}

LinkGaussDiagram rebuild(Components comps, SignMap signs) {
    return LinkGaussDiagram(std::move(comps), std::move(signs));
}

Components copy_components(const LinkGaussDiagram& l) {
    return Components(l.components().begin(), l.components().end());
}

LinkGaussDiagram r1_remove(const LinkGaussDiagram& l, const R1RemoveSite& s) {
    Components comps = copy_components(l);
    const auto ends = locate_endpoints(comps);
    auto it = ends.find(s.arrow);
    if (it == ends.end()) throw IllegalMoveError("no arrow " + std::to_string(s.arrow));
    if (!adjacent(comps, it->second.over, it->second.under)) {
        throw IllegalMoveError("R1: endpoints of arrow " + std::to_string(s.arrow) +
                               " are not adjacent");
    }
    erase_positions(comps, {it->second.over, it->second.under});
    SignMap signs = l.signs();
    signs.erase(s.arrow);
    return rebuild(std::move(comps), std::move(signs));
}

LinkGaussDiagram r1_add(const LinkGaussDiagram& l, const R1AddSite& s) {
    Components comps = copy_components(l);
    check_gap(comps, s.gap);
    const ArrowId a = l.max_arrow_id() + 1;
    insert_block(comps, s.gap, {Endpoint{a, s.first}, Endpoint{a, opposite(s.first)}});
    SignMap signs = l.signs();
    signs[a] = s.sign;
    return rebuild(std::move(comps), std::move(signs));
}

LinkGaussDiagram r2_remove(const LinkGaussDiagram& l, const R2RemoveSite& s) {
    Components comps = copy_components(l);
    const auto ends = locate_endpoints(comps);
    auto a = ends.find(s.first);
    auto b = ends.find(s.second);
    if (a == ends.end() || b == ends.end()) {
        throw IllegalMoveError("R2: unknown arrow");
    }
    if (l.sign(s.first) == l.sign(s.second)) {
        throw IllegalMoveError("R2: arrows must have opposite signs");
    }
    if (!adjacent(comps, a->second.over, b->second.over) ||
        !adjacent(comps, a->second.under, b->second.under)) {
        throw IllegalMoveError("R2: heads and tails must both be adjacent");
    }
    erase_positions(comps, {a->second.over, a->second.under, b->second.over, b->second.under});
    SignMap signs = l.signs();
    signs.erase(s.first);
    signs.erase(s.second);
    return rebuild(std::move(comps), std::move(signs));
}

LinkGaussDiagram r2_add(const LinkGaussDiagram& l, const R2AddSite& s) {
    Components comps = copy_components(l);
    check_gap(comps, s.over_gap);
    check_gap(comps, s.under_gap);
    const ArrowId a = l.max_arrow_id() + 1;
    const ArrowId b = a + 1;
    const Word over{{a, Role::Over}, {b, Role::Over}};
    const Word under = s.parallel ? Word{{a, Role::Under}, {b, Role::Under}}
                                  : Word{{b, Role::Under}, {a, Role::Under}};
    if (s.over_gap == s.under_gap) {
        Word block = s.over_first ? over : under;
        const Word& second = s.over_first ? under : over;
        block.insert(block.end(), second.begin(), second.end());
        insert_block(comps, s.over_gap, block);
    } else if (s.under_gap < s.over_gap) {
        insert_block(comps, s.over_gap, over);
        insert_block(comps, s.under_gap, under);
    } else {
        insert_block(comps, s.under_gap, under);
        insert_block(comps, s.over_gap, over);
    }
    SignMap signs = l.signs();
    signs[a] = s.sign;
    signs[b] = -s.sign;
    return rebuild(std::move(comps), std::move(signs));
}

// Checks an R3 site and returns the positions of its six endpoints.
std::array<Position, 6> check_r3(const LinkGaussDiagram& l, const Components& comps,
                                 const R3Site& s) {
    std::array<Position, 6> pos{};
    for (std::size_t k = 0; k < 3; ++k) {
        const Position p = s.blocks[k];
        if (!valid_position(comps, p)) throw IllegalMoveError("R3: block outside the diagram");
        const auto q = next_position(comps, p);
        if (!q) throw IllegalMoveError("R3: block runs past the end of the long component");
        pos[2 * k] = p;
        pos[2 * k + 1] = *q;
    }
    {
        auto sorted = pos;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw IllegalMoveError("R3: blocks overlap");
        }
    }
    // Classify blocks: top = two Overs, bottom = two Unders, middle = mixed.
    int top = -1, middle = -1, bottom = -1;
    for (int k = 0; k < 3; ++k) {
        const Endpoint& e0 = at(comps, pos[2 * k]);
        const Endpoint& e1 = at(comps, pos[2 * k + 1]);
        if (e0.arrow == e1.arrow) throw IllegalMoveError("R3: block holds both ends of an arrow");
        const int overs = (e0.role == Role::Over) + (e1.role == Role::Over);
        int& slot = overs == 2 ? top : (overs == 0 ? bottom : middle);
        if (slot != -1) throw IllegalMoveError("R3: blocks are not top/middle/bottom");
        slot = k;
    }
    auto block_arrows = [&](int k) {
        return std::pair{at(comps, pos[2 * k]).arrow, at(comps, pos[2 * k + 1]).arrow};
    };
    const auto [t0, t1] = block_arrows(top);
    const auto [m0, m1] = block_arrows(middle);
    const auto [b0, b1] = block_arrows(bottom);
    auto in_middle = [&](ArrowId a) { return a == m0 || a == m1; };
    if (in_middle(t0) == in_middle(t1)) throw IllegalMoveError("R3: strands do not meet pairwise");
    const ArrowId x = in_middle(t0) ? t0 : t1;
    const ArrowId y = in_middle(t0) ? t1 : t0;
    const ArrowId z = m0 == x ? m1 : m0;
    if (z == y || !((b0 == y && b1 == z) || (b0 == z && b1 == y))) {
        throw IllegalMoveError("R3: strands do not meet pairwise");
    }
    const Endpoint& mid_x = at(comps, pos[2 * middle + (m0 == x ? 0 : 1)]);
    if (mid_x.role != Role::Under) {
        throw IllegalMoveError("R3: middle strand must pass under the top strand");
    }
    if (!r3_is_legal(t0 == x, m0 == x, b0 == y, l.sign(x), l.sign(y), l.sign(z))) {
        throw IllegalMoveError("R3: signs and orders do not form a triangle");
    }
    return pos;
}

LinkGaussDiagram r3(const LinkGaussDiagram& l, const R3Site& s) {
    Components comps = copy_components(l);
    const auto pos = check_r3(l, comps, s);
    for (std::size_t k = 0; k < 3; ++k) {
        std::swap(comps[pos[2 * k].component][pos[2 * k].index],
                  comps[pos[2 * k + 1].component][pos[2 * k + 1].index]);
    }
    return rebuild(std::move(comps), l.signs());
}

LinkGaussDiagram band_pass(const LinkGaussDiagram& l, const BandPassSite& s) {
    if (!l.is_knot()) throw IllegalMoveError("band-pass needs a knot without circle components");
    return LinkGaussDiagram(apply_band_pass(l.to_long(), s));
}

void enumerate_r3(const LinkGaussDiagram& l, const Components& comps,
                  std::vector<MoveEvent>& out) {
    const auto ends = locate_endpoints(comps);
    std::set<std::array<Position, 3>> seen;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (std::size_t i = 0; i < comps[c].size(); ++i) {
            const Position tp{c, i};
            const auto tq = next_position(comps, tp);
            if (!tq) continue;
            const Endpoint& e0 = at(comps, tp);
            const Endpoint& e1 = at(comps, *tq);
            if (e0.role != Role::Over || e1.role != Role::Over || e0.arrow == e1.arrow) continue;
            for (const auto& [x, y] : {std::pair{e0.arrow, e1.arrow}, std::pair{e1.arrow, e0.arrow}}) {
                const Position ux = ends.at(x).under;
                for (const auto& mid : {previous_position(comps, ux), std::optional<Position>(ux)}) {
                    if (!mid) continue;
                    const auto mid_next = next_position(comps, *mid);
                    if (!mid_next) continue;
                    const Position other = *mid == ux ? *mid_next : *mid;
                    const Endpoint& oz = at(comps, other);
                    if (oz.role != Role::Over || oz.arrow == x || oz.arrow == y) continue;
                    const Position uy = ends.at(y).under;
                    const Position uz = ends.at(oz.arrow).under;
                    Position bottom;
                    if (next_position(comps, uy) == uz) {
                        bottom = uy;
                    } else if (next_position(comps, uz) == uy) {
                        bottom = uz;
                    } else {
                        continue;
                    }
                    R3Site site{{tp, *mid, bottom}};
                    std::sort(site.blocks.begin(), site.blocks.end());
                    if (!seen.insert(site.blocks).second) continue;
                    try {
                        check_r3(l, comps, site);
                    } catch (const IllegalMoveError&) {
                        continue;
                    }
                    out.emplace_back(site);
                }
            }
        }
    }
}

}  // namespace

bool r3_is_legal(bool top_meets_x_first, bool middle_meets_x_first, bool bottom_meets_y_first,
                 Sign x, Sign y, Sign z) {
    const int o_t = top_meets_x_first ? 1 : -1;
    const int o_m = middle_meets_x_first ? 1 : -1;
    const int o_b = bottom_meets_y_first ? 1 : -1;
    return to_int(x) * to_int(y) == o_m * o_b && to_int(x) * to_int(z) == o_t * o_b;
}

std::vector<MoveEvent> enumerate_moves(const LinkGaussDiagram& l, MoveKindSet kinds) {
    const Components comps = copy_components(l);
    std::vector<MoveEvent> out;
    const auto ends = locate_endpoints(comps);
    if (kinds.contains(MoveKind::R1Remove)) {
        for (const auto& [arrow, e] : ends) {
            if (adjacent(comps, e.over, e.under)) out.emplace_back(R1RemoveSite{arrow});
        }
    }
    if (kinds.contains(MoveKind::R2Remove)) {
        for (const auto& [a, ea] : ends) {
            for (const auto& [b, eb] : ends) {
                if (b <= a || l.sign(a) == l.sign(b)) continue;
                if (adjacent(comps, ea.over, eb.over) && adjacent(comps, ea.under, eb.under)) {
                    out.emplace_back(R2RemoveSite{a, b});
                }
            }
        }
    }
    if (kinds.contains(MoveKind::R3)) enumerate_r3(l, comps, out);
    const auto gaps = all_gaps(comps);
    if (kinds.contains(MoveKind::R1Add)) {
        for (const Gap& g : gaps) {
            for (Role r : {Role::Over, Role::Under}) {
                for (Sign s : {Sign::Positive, Sign::Negative}) out.emplace_back(R1AddSite{g, r, s});
            }
        }
    }
    if (kinds.contains(MoveKind::R2Add)) {
        for (const Gap& go : gaps) {
            for (const Gap& gu : gaps) {
                for (bool parallel : {true, false}) {
                    for (Sign s : {Sign::Positive, Sign::Negative}) {
                        out.emplace_back(R2AddSite{go, gu, parallel, s, true});
                        if (go == gu) out.emplace_back(R2AddSite{go, gu, parallel, s, false});
                    }
                }
            }
        }
    }
    if (kinds.contains(MoveKind::BandPass) && l.is_knot()) {
        for (const BandPassSite& s : find_band_pass_sites(l.to_long())) out.emplace_back(s);
    }
    if (kinds.contains(MoveKind::Saddle)) {
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            for (std::size_t j = i + 1; j < gaps.size(); ++j) {
                out.emplace_back(SaddleSite{gaps[i], gaps[j], Reconnection::Oriented});
            }
        }
    }
    if (kinds.contains(MoveKind::Birth)) out.emplace_back(BirthSite{});
    if (kinds.contains(MoveKind::Death)) {
        for (std::size_t c = 1; c < comps.size(); ++c) {
            if (comps[c].empty()) out.emplace_back(DeathSite{c});
        }
    }
    return out;
}

std::vector<MoveEvent> enumerate_moves(const LongGaussDiagram& d, MoveKindSet kinds) {
    MoveKindSet allowed;
    for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                       MoveKind::R3, MoveKind::BandPass}) {
        if (kinds.contains(k)) allowed.insert(k);
    }
    return enumerate_moves(LinkGaussDiagram(d), allowed);
}

LinkGaussDiagram apply(const LinkGaussDiagram& l, const MoveEvent& m) {
    return std::visit(
        [&l](const auto& s) -> LinkGaussDiagram {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, R1AddSite>) return r1_add(l, s);
            else if constexpr (std::is_same_v<S, R1RemoveSite>) return r1_remove(l, s);
            else if constexpr (std::is_same_v<S, R2AddSite>) return r2_add(l, s);
            else if constexpr (std::is_same_v<S, R2RemoveSite>) return r2_remove(l, s);
            else if constexpr (std::is_same_v<S, R3Site>) return r3(l, s);
            else if constexpr (std::is_same_v<S, BandPassSite>) return band_pass(l, s);
            else if constexpr (std::is_same_v<S, SaddleSite>) {
                return saddle(l, s.first, s.second, s.reconnection);
            } else if constexpr (std::is_same_v<S, BirthSite>) return birth(l);
            else return death(l, s.component);
        },
        m.site());
}

LongGaussDiagram apply(const LongGaussDiagram& d, const MoveEvent& m) {
    switch (m.kind()) {
        case MoveKind::Saddle:
        case MoveKind::Birth:
        case MoveKind::Death:
            throw IllegalMoveError(std::string(to_string(m.kind())) +
                                   " changes the component count; apply it to a link");
        default:
            return apply(LinkGaussDiagram(d), m).to_long();
    }
}

}  // namespace longknot
