#pragma once

#include "longknot/diagram.hpp"
#include "longknot/laurent.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace longknot {

/// Left argument of the pairing <p, I(D)>. An unsigned pattern stands for the
/// sum over all signings, each weighted by the product of its arrow signs.
class ArrowPattern {
public:
    /// Sign-free text such as "O1U2U1O2".
    static ArrowPattern unsigned_pattern(std::string_view text);
    /// Pattern that matches `d` exactly, signs included.
    static ArrowPattern signed_pattern(const LongGaussDiagram& d);

    const Word& word() const noexcept { return word_; }
    const std::optional<SignMap>& sign_constraint() const noexcept { return signs_; }
    bool is_unsigned() const noexcept { return !signs_.has_value(); }
    std::size_t arrow_count() const noexcept { return word_.size() / 2; }
    std::string to_string() const;

private:
    ArrowPattern(Word word, std::optional<SignMap> signs);

    Word word_;
    std::optional<SignMap> signs_;
};

/// Two interleaved arrows pointing in opposite directions, the first one
/// pointing forward: O1U2U1O2.
const ArrowPattern& v21_pattern();
/// Two interleaved arrows pointing in opposite directions, the first one
/// pointing backward: U1O2O1U2.
const ArrowPattern& v22_pattern();

/// Largest diagram accepted for subdiagram enumeration of degree > 2.
inline constexpr std::size_t max_arrows_for_high_degree = 32;

/// Visits the C(n, k) subdiagrams that keep exactly k arrows (word order and
/// signs induced, arrow ids unchanged).
void for_each_subdiagram(const LongGaussDiagram& d, std::size_t k,
                         const std::function<void(const LongGaussDiagram&)>& visit);
std::vector<LongGaussDiagram> subdiagrams(const LongGaussDiagram& d, std::size_t k);

/// <p, I(d)>, computed by an ordered embedding search.
std::int64_t pairing(const ArrowPattern& p, const LongGaussDiagram& d);

std::int64_t v21(const LongGaussDiagram& d);
std::int64_t v22(const LongGaussDiagram& d);
/// (v21 + v22) mod 2, the band-pass invariant.
int beta(const LongGaussDiagram& d);

/// Signed count of the endpoints strictly between the arrow's two ends: an
/// Over endpoint counts +sign, an Under endpoint -sign. Arrows with both ends
/// inside cancel, so only arrows crossing this one contribute.
std::int64_t arrow_index(const LongGaussDiagram& d, ArrowId arrow);

/// Sum over arrows with nonzero index of sign(c) * t^|index(c)|.
LaurentPoly w_polynomial(const LongGaussDiagram& d);

struct InvariantReport {
    std::int64_t v21 = 0;
    std::int64_t v22 = 0;
    int beta = 0;
    LaurentPoly w;

    friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport report(const LongGaussDiagram& d);

}  // namespace longknot
