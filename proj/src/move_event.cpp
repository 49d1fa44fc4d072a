#include "longknot/move_event.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace longknot {

namespace {

constexpr std::array<std::string_view, move_kind_count> kind_names{
    "R1_add", "R1_remove", "R2_add", "R2_remove", "R3",
    "BandPass", "Saddle", "Birth", "Death",
};

[[noreturn]] void bad_event(std::string_view text, const std::string& why) {
    throw std::invalid_argument("bad move event '" + std::string(text) + "': " + why);
}

std::size_t to_size(std::string_view text, std::string_view context) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        bad_event(context, "expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        out.push_back(text.substr(start, at == std::string_view::npos ? at : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return out;
}

std::string gap_text(const Gap& g) {
    return std::to_string(g.component) + ":" + std::to_string(g.index);
}

std::string position_text(const Position& p) {
    return std::to_string(p.component) + ":" + std::to_string(p.index);
}

std::pair<std::size_t, std::size_t> parse_pair(std::string_view text, std::string_view context) {
    const auto parts = split(text, ':');
    if (parts.size() != 2) bad_event(context, "expected <component>:<index>");
    return {to_size(parts[0], context), to_size(parts[1], context)};
}

Sign parse_sign(std::string_view text, std::string_view context) {
    if (text == "+") return Sign::Positive;
    if (text == "-") return Sign::Negative;
    bad_event(context, "expected sign '+' or '-'");
}

bool parse_flag(std::string_view text, std::string_view context) {
    if (text == "1") return true;
    if (text == "0") return false;
    bad_event(context, "expected flag 0 or 1");
}

struct Fields {
    std::string_view source;
    std::map<std::string, std::string, std::less<>> values;

    std::string_view get(std::string_view key) const {
        auto it = values.find(key);
        if (it == values.end()) bad_event(source, "missing field '" + std::string(key) + "'");
        return it->second;
    }
};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(MoveKind kind) { return kind_names[static_cast<std::size_t>(kind)]; }

MoveKind parse_move_kind(std::string_view name) {
    for (std::size_t i = 0; i < kind_names.size(); ++i) {
        if (kind_names[i] == name) return static_cast<MoveKind>(i);
    }
    throw std::invalid_argument("unknown move kind '" + std::string(name) + "'");
}

MoveEvent::MoveEvent(MoveSite site) : site_(std::move(site)) {
    std::visit(
        [](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, R2RemoveSite>) {
                require(s.first != s.second, "R2_remove needs two distinct arrows");
            } else if constexpr (std::is_same_v<S, R3Site>) {
                require(s.blocks[0] != s.blocks[1] && s.blocks[0] != s.blocks[2] &&
                            s.blocks[1] != s.blocks[2],
                        "R3 needs three distinct blocks");
            } else if constexpr (std::is_same_v<S, BandPassSite>) {
                for (std::size_t i = 0; i < 4; ++i) {
                    for (std::size_t j = i + 1; j < 4; ++j) {
                        require(s.arrows[i] != s.arrows[j], "band-pass needs four distinct arrows");
                    }
                }
                require(s.configuration >= 1 && s.configuration <= 6,
                        "band-pass configuration must be 1..6");
                require(s.base_arc >= 1 && s.base_arc <= 4, "band-pass base arc must be 1..4");
            } else if constexpr (std::is_same_v<S, SaddleSite>) {
                require(s.first != s.second, "saddle needs two distinct arcs");
            } else if constexpr (std::is_same_v<S, DeathSite>) {
                require(s.component >= 1, "only circle components (index >= 1) can die");
            }
        },
        site_);
}

MoveKind MoveEvent::kind() const noexcept { return static_cast<MoveKind>(site_.index()); }

std::string MoveEvent::to_string() const {
    std::string out(longknot::to_string(kind()));
    std::visit(
        [&out](const auto& s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, R1AddSite>) {
                out += " gap=" + gap_text(s.gap) + " first=" + role_char(s.first) +
                       " sign=" + sign_char(s.sign);
            } else if constexpr (std::is_same_v<S, R1RemoveSite>) {
                out += " arrow=" + std::to_string(s.arrow);
            } else if constexpr (std::is_same_v<S, R2AddSite>) {
                out += " over=" + gap_text(s.over_gap) + " under=" + gap_text(s.under_gap) +
                       " parallel=" + (s.parallel ? "1" : "0") + " sign=" + sign_char(s.sign) +
                       " over_first=" + (s.over_first ? "1" : "0");
            } else if constexpr (std::is_same_v<S, R2RemoveSite>) {
                out += " arrows=" + std::to_string(s.first) + "," + std::to_string(s.second);
            } else if constexpr (std::is_same_v<S, R3Site>) {
                out += " blocks=" + position_text(s.blocks[0]) + "," +
                       position_text(s.blocks[1]) + "," + position_text(s.blocks[2]);
            } else if constexpr (std::is_same_v<S, BandPassSite>) {
                out += " arrows=" + std::to_string(s.arrows[0]) + "," +
                       std::to_string(s.arrows[1]) + "," + std::to_string(s.arrows[2]) + "," +
                       std::to_string(s.arrows[3]) +
                       " variant=" + std::to_string(static_cast<int>(s.variant)) +
                       " config=" + std::to_string(s.configuration) +
                       " base=" + std::to_string(s.base_arc);
            } else if constexpr (std::is_same_v<S, SaddleSite>) {
                out += " arcs=" + gap_text(s.first) + "," + gap_text(s.second) + " reconnect=" +
                       (s.reconnection == Reconnection::Oriented ? "oriented" : "crossed");
            } else if constexpr (std::is_same_v<S, DeathSite>) {
                out += " component=" + std::to_string(s.component);
            }
        },
        site_);
    return out;
}

MoveEvent MoveEvent::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind_name;
    if (!(in >> kind_name)) bad_event(text, "empty");
    Fields fields{text, {}};
    for (std::string token; in >> token;) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) bad_event(text, "expected key=value, got '" + token + "'");
        if (!fields.values.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
            bad_event(text, "repeated field '" + token.substr(0, eq) + "'");
        }
    }
    MoveKind kind;
    try {
        kind = parse_move_kind(kind_name);
    } catch (const std::invalid_argument&) {
        bad_event(text, "unknown kind '" + kind_name + "'");
    }
    auto gap = [&](std::string_view key) {
        auto [c, i] = parse_pair(fields.get(key), text);
        return Gap{c, i};
    };
    auto arrow_list = [&](std::string_view key, std::size_t count) {
        const auto parts = split(fields.get(key), ',');
        if (parts.size() != count) bad_event(text, "expected " + std::to_string(count) + " arrows");
        std::vector<ArrowId> out;
        for (auto p : parts) out.push_back(static_cast<ArrowId>(to_size(p, text)));
        return out;
    };
    const std::size_t expected_fields = [&] {
        switch (kind) {
            case MoveKind::R1Add: return 3;
            case MoveKind::R1Remove: return 1;
            case MoveKind::R2Add: return 5;
            case MoveKind::R2Remove: return 1;
            case MoveKind::R3: return 1;
            case MoveKind::BandPass: return 4;
            case MoveKind::Saddle: return 2;
            case MoveKind::Birth: return 0;
            case MoveKind::Death: return 1;
        }
        return 0;
    }();
    switch (kind) {
        case MoveKind::R1Add: {
            const std::string_view first = fields.get("first");
            if (first != "O" && first != "U") bad_event(text, "first must be O or U");
            MoveEvent e(R1AddSite{gap("gap"), first == "O" ? Role::Over : Role::Under,
                                  parse_sign(fields.get("sign"), text)});
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return e;
        }
        case MoveKind::R1Remove:
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(R1RemoveSite{static_cast<ArrowId>(to_size(fields.get("arrow"), text))});
        case MoveKind::R2Add: {
            MoveEvent e(R2AddSite{gap("over"), gap("under"),
                                  parse_flag(fields.get("parallel"), text),
                                  parse_sign(fields.get("sign"), text),
                                  parse_flag(fields.get("over_first"), text)});
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return e;
        }
        case MoveKind::R2Remove: {
            const auto a = arrow_list("arrows", 2);
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(R2RemoveSite{a[0], a[1]});
        }
        case MoveKind::R3: {
            const auto parts = split(fields.get("blocks"), ',');
            if (parts.size() != 3) bad_event(text, "expected three blocks");
            R3Site site;
            for (std::size_t k = 0; k < 3; ++k) {
                auto [c, i] = parse_pair(parts[k], text);
                site.blocks[k] = Position{c, i};
            }
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(site);
        }
        case MoveKind::BandPass: {
            const auto a = arrow_list("arrows", 4);
            BandPassSite site;
            std::copy(a.begin(), a.end(), site.arrows.begin());
            const std::size_t variant = to_size(fields.get("variant"), text);
            if (variant != 1 && variant != 2) bad_event(text, "variant must be 1 or 2");
            site.variant = static_cast<BandPassVariant>(variant);
            site.configuration = static_cast<int>(to_size(fields.get("config"), text));
            site.base_arc = static_cast<int>(to_size(fields.get("base"), text));
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(site);
        }
        case MoveKind::Saddle: {
            const auto parts = split(fields.get("arcs"), ',');
            if (parts.size() != 2) bad_event(text, "expected two arcs");
            const auto [c1, i1] = parse_pair(parts[0], text);
            const auto [c2, i2] = parse_pair(parts[1], text);
            const std::string_view how = fields.get("reconnect");
            if (how != "oriented" && how != "crossed") {
                bad_event(text, "reconnect must be oriented or crossed");
            }
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(SaddleSite{Gap{c1, i1}, Gap{c2, i2},
                                        how == "oriented" ? Reconnection::Oriented
                                                          : Reconnection::Crossed});
        }
        case MoveKind::Birth:
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(BirthSite{});
        case MoveKind::Death:
            if (fields.values.size() != expected_fields) bad_event(text, "unexpected fields");
            return MoveEvent(DeathSite{to_size(fields.get("component"), text)});
    }
    bad_event(text, "unreachable");
}

}  // namespace longknot
