#pragma once

#include "longknot/diagram.hpp"
#include "longknot/move_event.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace longknot {

struct CobordismCounts {
    std::size_t births = 0;
    std::size_t saddles = 0;
    std::size_t deaths = 0;

    /// #b - #s + #d
    long long euler() const {
        return static_cast<long long>(births) - static_cast<long long>(saddles) +
               static_cast<long long>(deaths);
    }
    friend bool operator==(const CobordismCounts&, const CobordismCounts&) = default;
};

CobordismCounts count_events(std::span<const MoveEvent> events);

/// Malformed certificate text.
class CertificateFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An edit script from `start` to `end`. Arrow ids in the events refer to the
/// ids of `start` and to ids created along the way (max + 1, max + 2).
///
/// Text form:
///   start <link code>
///   event <move event>      (zero or more)
///   end <link code>
///   counts births=<b> saddles=<s> deaths=<d>
/// Blank lines and lines starting with '#' are ignored.
struct CobordismCertificate {
    LinkGaussDiagram start;
    std::vector<MoveEvent> events;
    LinkGaussDiagram end;
    CobordismCounts counts;

    /// Builds a certificate whose counts are taken from the event list.
    static CobordismCertificate make(LinkGaussDiagram start, std::vector<MoveEvent> events,
                                     LinkGaussDiagram end);

    std::string to_text() const;
    static CobordismCertificate parse(std::string_view text);
};

enum class CertificateMode { Concordance, Ribbon };

struct Verdict {
    bool accepted = false;
    /// Index of the first event that failed to apply; empty when the failure
    /// is in the end diagram or the accounting, or when accepted.
    std::optional<std::size_t> failing_step;
    std::string reason;
    CobordismCounts counts;  ///< counted from the event list
};

/// Replays the events and checks the accounting. Band-pass events are not
/// concordance moves and are rejected.
Verdict verify_certificate(const CobordismCertificate& c, CertificateMode mode);

/// Applies events in order; throws IllegalMoveError at the first bad one.
LinkGaussDiagram replay(const LinkGaussDiagram& start, std::span<const MoveEvent> events);

/// Ribbon certificate from K # K^-1 (renumbered) to the long unknot using
/// 2n saddles, n R2 cancellations and 2n deaths.
CobordismCertificate trivialize_inverse_pair(const LongGaussDiagram& k);

}  // namespace longknot
