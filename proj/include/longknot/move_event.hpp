#pragma once

#include "longknot/diagram.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>

namespace longknot {

enum class MoveKind {
    R1Add,
    R1Remove,
    R2Add,
    R2Remove,
    R3,
    BandPass,
    Saddle,
    Birth,
    Death,
};

inline constexpr std::size_t move_kind_count = 9;

std::string_view to_string(MoveKind kind);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
MoveKind parse_move_kind(std::string_view name);

/// Set of move kinds, as a bit mask.
class MoveKindSet {
public:
    constexpr MoveKindSet() = default;
    constexpr MoveKindSet(std::initializer_list<MoveKind> kinds) {
        for (MoveKind k : kinds) insert(k);
    }
    constexpr void insert(MoveKind k) { bits_ |= bit(k); }
    constexpr bool contains(MoveKind k) const { return (bits_ & bit(k)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }

    static constexpr MoveKindSet reidemeister() {
        return {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove,
                MoveKind::R3};
    }
    /// Moves that only ever shrink or permute a diagram.
    static constexpr MoveKindSet reducing() {
        return {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3};
    }

private:
    static constexpr unsigned bit(MoveKind k) { return 1u << static_cast<unsigned>(k); }
    unsigned bits_ = 0;
};

/// A word position: endpoint `index` of component `component` (0 = long).
struct Position {
    std::size_t component = 0;
    std::size_t index = 0;
    friend auto operator<=>(const Position&, const Position&) = default;
};

/// An arc between consecutive endpoints. On the long component gap i lies
/// before endpoint i (gap m is after the last of m endpoints). On a circle
/// with m > 0 endpoints gap i lies before endpoint i, i < m; an empty circle
/// has the single gap 0.
struct Gap {
    std::size_t component = 0;
    std::size_t index = 0;
    friend auto operator<=>(const Gap&, const Gap&) = default;
};

struct R1AddSite {
    Gap gap;
    Role first = Role::Over;  ///< role of the endpoint placed first
    Sign sign = Sign::Positive;
    friend bool operator==(const R1AddSite&, const R1AddSite&) = default;
};

struct R1RemoveSite {
    ArrowId arrow = 0;
    friend bool operator==(const R1RemoveSite&, const R1RemoveSite&) = default;
};

/// Inserts arrows a = max+1 and b = max+2 with sign(a) = sign, sign(b) =
/// -sign. The block O_a O_b goes into over_gap, U_a U_b (parallel) or U_b U_a
/// into under_gap. When both gaps coincide, over_first orders the blocks.
struct R2AddSite {
    Gap over_gap;
    Gap under_gap;
    bool parallel = true;
    Sign sign = Sign::Positive;
    bool over_first = true;
    friend bool operator==(const R2AddSite&, const R2AddSite&) = default;
};

struct R2RemoveSite {
    ArrowId first = 0;
    ArrowId second = 0;
    friend bool operator==(const R2RemoveSite&, const R2RemoveSite&) = default;
};

/// Three blocks of two consecutive endpoints, each given by the position of
/// its first endpoint.
struct R3Site {
    std::array<Position, 3> blocks{};
    friend bool operator==(const R3Site&, const R3Site&) = default;
};

enum class BandPassVariant { First = 1, Second = 2 };

/// Four arrows c11, c12, c21, c22 where c_ij is the crossing of strand h_i
/// over strand v_j. Configuration 1..5 is the cyclic order of the four local
/// strands along the knot for closings drawn without extra crossings; 6 is
/// the remaining order that needs virtual closing arcs. base_arc 1..4 is the
/// closing arc holding the point at infinity.
struct BandPassSite {
    std::array<ArrowId, 4> arrows{};
    BandPassVariant variant = BandPassVariant::First;
    int configuration = 1;
    int base_arc = 1;
    friend bool operator==(const BandPassSite&, const BandPassSite&) = default;
};

enum class Reconnection { Oriented, Crossed };

struct SaddleSite {
    Gap first;
    Gap second;
    Reconnection reconnection = Reconnection::Oriented;
    friend bool operator==(const SaddleSite&, const SaddleSite&) = default;
};

struct BirthSite {
    friend bool operator==(const BirthSite&, const BirthSite&) = default;
};

struct DeathSite {
    std::size_t component = 1;
    friend bool operator==(const DeathSite&, const DeathSite&) = default;
};

using MoveSite = std::variant<R1AddSite, R1RemoveSite, R2AddSite, R2RemoveSite, R3Site,
                              BandPassSite, SaddleSite, BirthSite, DeathSite>;

/// One replayable edit. The kind is determined by the site's type.
class MoveEvent {
public:
    /// Throws std::invalid_argument when the site is malformed (repeated
    /// arrows, identical arcs, death of the long component, ...).
    explicit MoveEvent(MoveSite site);

    MoveKind kind() const noexcept;
    const MoveSite& site() const noexcept { return site_; }

    template <typename Site>
    const Site& as() const {
        return std::get<Site>(site_);
    }

    /// Stable text form, e.g. "R2_remove arrows=3,5" or
    /// "Saddle arcs=0:1,0:3 reconnect=oriented".
    std::string to_string() const;
    /// Inverse of to_string.
    static MoveEvent parse(std::string_view text);

    friend bool operator==(const MoveEvent&, const MoveEvent&) = default;

private:
    MoveSite site_;
};

}  // namespace longknot
