#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace longknot {

/// Crossing sign of a classical crossing.
enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

/// Which strand of the crossing an endpoint sits on. Arrows point Over -> Under.
enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) noexcept { return r == Role::Over ? Role::Under : Role::Over; }

constexpr char role_char(Role r) noexcept { return r == Role::Over ? 'O' : 'U'; }

using ArrowId = std::uint32_t;

struct Endpoint {
    ArrowId arrow = 0;
    Role role = Role::Over;

    friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

using Word = std::vector<Endpoint>;
using SignMap = std::map<ArrowId, Sign>;

/// Raised when a word/sign pair violates the Gauss diagram invariants.
class DiagramError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Word positions of the two endpoints of one arrow.
struct ArrowSpan {
    std::size_t over = 0;
    std::size_t under = 0;

    std::size_t first() const noexcept { return over < under ? over : under; }
    std::size_t last() const noexcept { return over < under ? under : over; }
    /// True when the arrow points left to right along the word.
    bool points_forward() const noexcept { return over < under; }
};

/// Checks that every arrow in `components` occurs exactly twice (once per
/// role) and that `signs` has exactly one entry per arrow.
void validate_components(std::span<const Word> components, const SignMap& signs);

/// Gauss diagram of a long virtual knot: endpoints read from -inf to +inf.
class LongGaussDiagram {
public:
    LongGaussDiagram() = default;
    LongGaussDiagram(Word word, SignMap signs);

    const Word& word() const noexcept { return word_; }
    const SignMap& signs() const noexcept { return signs_; }

    std::size_t arrow_count() const noexcept { return signs_.size(); }
    bool empty() const noexcept { return word_.empty(); }
    Sign sign(ArrowId arrow) const;
    std::vector<ArrowId> arrows() const;
    ArrowId max_arrow_id() const noexcept;

    /// Positions of both endpoints for every arrow.
    std::map<ArrowId, ArrowSpan> spans() const;

    friend bool operator==(const LongGaussDiagram&, const LongGaussDiagram&) = default;

private:
    Word word_;
    SignMap signs_;
};

/// Gauss diagram on the circle. Equality is up to rotation of the word and
/// relabelling of arrows.
class ClosedGaussDiagram {
public:
    ClosedGaussDiagram() = default;
    ClosedGaussDiagram(Word word, SignMap signs);

    const Word& word() const noexcept { return word_; }
    const SignMap& signs() const noexcept { return signs_; }
    std::size_t arrow_count() const noexcept { return signs_.size(); }

    /// Lexicographically least canonical serialization over all rotations.
    std::string canonical_code() const;

    friend bool operator==(const ClosedGaussDiagram& a, const ClosedGaussDiagram& b) {
        return a.canonical_code() == b.canonical_code();
    }

private:
    Word word_;
    SignMap signs_;
};

/// One long component plus zero or more circle components. Component 0 is the
/// long one; circles are components 1..k.
class LinkGaussDiagram {
public:
    LinkGaussDiagram() : components_(1) {}
    explicit LinkGaussDiagram(const LongGaussDiagram& knot);
    LinkGaussDiagram(Word long_component, std::vector<Word> circles, SignMap signs);
    /// components[0] is the long component.
    LinkGaussDiagram(std::vector<Word> components, SignMap signs);

    const Word& long_component() const noexcept { return components_.front(); }
    std::span<const Word> circles() const noexcept {
        return std::span<const Word>(components_).subspan(1);
    }
    std::span<const Word> components() const noexcept { return components_; }
    const Word& component(std::size_t index) const;
    std::size_t component_count() const noexcept { return components_.size(); }

    const SignMap& signs() const noexcept { return signs_; }
    std::size_t arrow_count() const noexcept { return signs_.size(); }
    Sign sign(ArrowId arrow) const;
    ArrowId max_arrow_id() const noexcept;

    /// True when there are no circle components.
    bool is_knot() const noexcept { return components_.size() == 1; }
    /// Requires is_knot().
    LongGaussDiagram to_long() const;

    friend bool operator==(const LinkGaussDiagram&, const LinkGaussDiagram&) = default;

private:
    std::vector<Word> components_;
    SignMap signs_;
};

}  // namespace longknot
