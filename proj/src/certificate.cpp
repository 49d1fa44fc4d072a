#include "longknot/certificate.hpp"

#include "longknot/gauss_code.hpp"
#include "longknot/moves.hpp"
#include "longknot/operations.hpp"

#include <sstream>

namespace longknot {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

CobordismCounts parse_counts(std::string_view rest) {
    std::istringstream in{std::string(rest)};
    CobordismCounts c;
    bool seen[3] = {false, false, false};
    for (std::string token; in >> token;) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw CertificateFormatError("bad counts field '" + token + "'");
        const std::string key = token.substr(0, eq);
        std::size_t value = 0;
        try {
            std::size_t used = 0;
            value = std::stoull(token.substr(eq + 1), &used);
            if (used != token.size() - eq - 1) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw CertificateFormatError("bad count in '" + token + "'");
        }
        int slot = key == "births" ? 0 : key == "saddles" ? 1 : key == "deaths" ? 2 : -1;
        if (slot < 0 || seen[slot]) throw CertificateFormatError("bad counts field '" + token + "'");
        seen[slot] = true;
        (slot == 0 ? c.births : slot == 1 ? c.saddles : c.deaths) = value;
    }
    if (!seen[0] || !seen[1] || !seen[2]) {
        throw CertificateFormatError("counts line needs births, saddles and deaths");
    }
    return c;
}

bool same_link(const LinkGaussDiagram& a, const LinkGaussDiagram& b) {
    return serialize(a) == serialize(b);
}

}  // namespace

CobordismCounts count_events(std::span<const MoveEvent> events) {
    CobordismCounts c;
    for (const MoveEvent& e : events) {
        switch (e.kind()) {
            case MoveKind::Birth: ++c.births; break;
            case MoveKind::Saddle: ++c.saddles; break;
            case MoveKind::Death: ++c.deaths; break;
            default: break;
        }
    }
    return c;
}

CobordismCertificate CobordismCertificate::make(LinkGaussDiagram start,
                                                std::vector<MoveEvent> events,
                                                LinkGaussDiagram end) {
    const CobordismCounts counts = count_events(events);
    return CobordismCertificate{std::move(start), std::move(events), std::move(end), counts};
}

std::string CobordismCertificate::to_text() const {
    std::string out = "start " + serialize(start) + "\n";
    for (const MoveEvent& e : events) out += "event " + e.to_string() + "\n";
    out += "end " + serialize(end) + "\n";
    out += "counts births=" + std::to_string(counts.births) +
           " saddles=" + std::to_string(counts.saddles) +
           " deaths=" + std::to_string(counts.deaths) + "\n";
    return out;
}

CobordismCertificate CobordismCertificate::parse(std::string_view text) {
    std::optional<LinkGaussDiagram> start;
    std::optional<LinkGaussDiagram> end;
    std::optional<CobordismCounts> counts;
    std::vector<MoveEvent> events;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto space = line.find(' ');
        const std::string_view key = line.substr(0, space);
        const std::string_view rest =
            space == std::string_view::npos ? std::string_view{} : trim(line.substr(space + 1));
        const std::string where = "line " + std::to_string(line_no) + ": ";
        try {
            if (key == "start") {
                if (start || !events.empty() || end) throw CertificateFormatError("unexpected start");
                start = parse_link_code(rest);
            } else if (key == "event") {
                if (!start || end) throw CertificateFormatError("event outside start/end");
                events.push_back(MoveEvent::parse(rest));
            } else if (key == "end") {
                if (!start || end) throw CertificateFormatError("unexpected end");
                end = parse_link_code(rest);
            } else if (key == "counts") {
                if (!end || counts) throw CertificateFormatError("counts must follow end once");
                counts = parse_counts(rest);
            } else {
                throw CertificateFormatError("unknown line kind '" + std::string(key) + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw CertificateFormatError(where + e.what());
        }
    }
    if (!start || !end || !counts) {
        throw CertificateFormatError("certificate needs start, end and counts lines");
    }
    return CobordismCertificate{std::move(*start), std::move(events), std::move(*end), *counts};
}

LinkGaussDiagram replay(const LinkGaussDiagram& start, std::span<const MoveEvent> events) {
    LinkGaussDiagram current = start;
    for (const MoveEvent& e : events) current = apply(current, e);
    return current;
}

Verdict verify_certificate(const CobordismCertificate& c, CertificateMode mode) {
    Verdict v;
    v.counts = count_events(c.events);
    LinkGaussDiagram current = c.start;
    for (std::size_t i = 0; i < c.events.size(); ++i) {
        const MoveEvent& e = c.events[i];
        if (e.kind() == MoveKind::BandPass) {
            v.failing_step = i;
            v.reason = "band-pass is not a concordance move";
            return v;
        }
        try {
            current = apply(current, e);
        } catch (const std::invalid_argument& err) {
            v.failing_step = i;
            v.reason = err.what();
            return v;
        }
    }
    if (!same_link(renumber(current), renumber(c.end))) {
        v.reason = "replay ends at " + serialize(current) + ", certificate claims " +
                   serialize(c.end);
        return v;
    }
    if (c.counts != v.counts) {
        v.reason = "recorded counts do not match the events";
        return v;
    }
    if (v.counts.euler() != 0) {
        v.reason = "#b - #s + #d = " + std::to_string(v.counts.euler()) + ", not 0";
        return v;
    }
    if (mode == CertificateMode::Ribbon && v.counts.births != 0) {
        v.reason = "ribbon certificates may not use births";
        return v;
    }
    v.accepted = true;
    return v;
}

CobordismCertificate trivialize_inverse_pair(const LongGaussDiagram& k) {
    const LongGaussDiagram d = renumber(concatenate(k, inverse(k)));
    const LinkGaussDiagram start(d);
    const std::size_t half = d.word().size() / 2;
    std::vector<MoveEvent> events;
    LinkGaussDiagram current = start;
    auto push = [&](MoveEvent e) {
        current = apply(current, e);
        events.push_back(std::move(e));
    };
    // The word is e_1..e_h e'_h..e'_1 with e'_j the mirror of e_j. Cutting
    // around the innermost pair splits it off as a circle; repeat outwards.
    for (std::size_t j = half; j >= 1; --j) {
        const std::size_t before = current.component_count();
        push(MoveEvent(SaddleSite{Gap{0, j - 1}, Gap{0, j + 1}, Reconnection::Oriented}));
        if (current.component_count() != before + 1) {
            throw std::logic_error("saddle did not split off a circle");
        }
    }
    const Word& w = d.word();
    for (std::size_t p = 0; p < half; ++p) {
        if (w[p].role != Role::Over) continue;
        const ArrowId x = w[p].arrow;
        const ArrowId mirror = w[w.size() - 1 - p].arrow;
        push(MoveEvent(R2RemoveSite{x, mirror}));
    }
    for (std::size_t j = 0; j < half; ++j) push(MoveEvent(DeathSite{1}));
    return CobordismCertificate::make(start, std::move(events), LinkGaussDiagram());
}

}  // namespace longknot
