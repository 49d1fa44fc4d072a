#include "longknot/band_pass_pairs.hpp"

#include "longknot/band_pass.hpp"
#include "longknot/operations.hpp"

#include <random>
#include <stdexcept>

namespace longknot {

std::vector<ConfigCase> all_config_cases() {
    std::vector<ConfigCase> out;
    for (int configuration = 1; configuration <= 5; ++configuration) {
        for (int base = 1; base <= 4; ++base) {
            for (BandPassVariant v : {BandPassVariant::First, BandPassVariant::Second}) {
                out.push_back(ConfigCase{configuration, base, v});
            }
        }
    }
    return out;
}

BandPassPair generate_band_pass_pair(const ConfigCase& c, std::size_t extra_arrows,
                                     std::uint64_t seed) {
    if (c.configuration < 1 || c.configuration > 5) {
        throw std::invalid_argument("configuration must be 1..5");
    }
    if (c.base_arc < 1 || c.base_arc > 4) throw std::invalid_argument("base arc must be 1..4");
    if (c.variant != BandPassVariant::First && c.variant != BandPassVariant::Second) {
        throw std::invalid_argument("variant must be 1 or 2");
    }
    std::mt19937_64 rng(seed);
    const std::array<ArrowId, 4> band{1, 2, 3, 4};
    const BandPassTemplate t = band_pass_template(c.variant, band);
    const auto& order = band_pass_configurations()[static_cast<std::size_t>(c.configuration - 1)];

    SignMap signs;
    for (std::size_t k = 0; k < 4; ++k) signs[band[k]] = t.signs[k];

    // Slot 0 is the part of the base arc after infinity, slots 1..3 the
    // connecting arcs between strands, slot 4 the base arc before infinity.
    std::array<Word, 5> slots;
    for (std::size_t e = 0; e < extra_arrows; ++e) {
        const auto a = static_cast<ArrowId>(5 + e);
        signs[a] = uniform_below(rng, 2) == 0 ? Sign::Positive : Sign::Negative;
        for (Role r : {Role::Over, Role::Under}) {
            Word& slot = slots[uniform_below(rng, slots.size())];
            const auto at = static_cast<std::ptrdiff_t>(uniform_below(rng, slot.size() + 1));
            slot.insert(slot.begin() + at, Endpoint{a, r});
        }
    }
    Word word = slots[0];
    for (std::size_t i = 0; i < 4; ++i) {
        const auto strand = static_cast<std::size_t>(
            order[(static_cast<std::size_t>(c.base_arc) + i) % 4]);
        word.insert(word.end(), t.strands[strand].begin(), t.strands[strand].end());
        word.insert(word.end(), slots[i + 1].begin(), slots[i + 1].end());
    }
    LongGaussDiagram before(std::move(word), std::move(signs));
    const BandPassSite site{band, c.variant, c.configuration, c.base_arc};
    LongGaussDiagram after = apply_band_pass(before, site);
    return BandPassPair{std::move(before), std::move(after), site};
}

}  // namespace longknot
