#include "longknot/band_pass.hpp"

#include "longknot/moves.hpp"

#include <algorithm>
#include <set>

namespace longknot {

namespace {

constexpr std::size_t c11 = 0, c12 = 1, c21 = 2, c22 = 3;

// Configuration and base arc of the site, if the labelling fits the template.
std::optional<std::pair<int, int>> match(const std::map<ArrowId, ArrowSpan>& spans,
                                         const SignMap& signs, BandPassVariant variant,
                                         const std::array<ArrowId, 4>& arrows) {
    for (ArrowId a : arrows) {
        if (!spans.contains(a)) return std::nullopt;
    }
    std::array<std::pair<std::size_t, std::size_t>, 4> starts{};  // (position, strand)
    auto fits = [&](const BandPassTemplate& t) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (signs.at(arrows[k]) != t.signs[k]) return false;
        }
        for (std::size_t s = 0; s < 4; ++s) {
            std::array<std::size_t, 2> pos{};
            for (std::size_t k = 0; k < 2; ++k) {
                const Endpoint& e = t.strands[s][k];
                const ArrowSpan& span = spans.at(e.arrow);
                pos[k] = e.role == Role::Over ? span.over : span.under;
            }
            if (pos[1] != pos[0] + 1) return false;
            starts[s] = {pos[0], s};
        }
        return true;
    };
    if (!fits(band_pass_template(variant, arrows, true)) &&
        !fits(band_pass_template(variant, arrows, false))) {
        return std::nullopt;
    }
    std::sort(starts.begin(), starts.end());
    std::array<BandStrand, 4> seq{};
    for (std::size_t k = 0; k < 4; ++k) seq[k] = static_cast<BandStrand>(starts[k].second);
    const auto h1 = std::find(seq.begin(), seq.end(), BandStrand::H1);
    std::array<BandStrand, 4> cyclic{};
    std::rotate_copy(seq.begin(), h1, seq.end(), cyclic.begin());
    const auto& configs = band_pass_configurations();
    const auto found = std::find(configs.begin(), configs.end(), cyclic);
    const int configuration = static_cast<int>(found - configs.begin()) + 1;
    // The long word starts on strand cyclic[k]; infinity sits on the arc
    // after cyclic[k - 1].
    const auto k = static_cast<int>(std::find(cyclic.begin(), cyclic.end(), seq[0]) - cyclic.begin());
    const int base_arc = (k + 3) % 4 + 1;
    return std::pair{configuration, base_arc};
}

}  // namespace

BandPassTemplate band_pass_template(BandPassVariant variant, const std::array<ArrowId, 4>& arrows,
                                   bool h1_on_top) {
    auto over = [&](std::size_t c) { return Endpoint{arrows[c], Role::Over}; };
    auto under = [&](std::size_t c) { return Endpoint{arrows[c], Role::Under}; };
    // h1 runs right, h2 left; v1 is the left vertical strand, v2 runs opposite.
    const bool v1_up = (variant == BandPassVariant::First) == h1_on_top;
    const std::size_t low1 = h1_on_top ? c21 : c11;   // v1 meets the lower h strand here
    const std::size_t high1 = h1_on_top ? c11 : c21;
    const std::size_t low2 = h1_on_top ? c22 : c12;
    const std::size_t high2 = h1_on_top ? c12 : c22;
    BandPassTemplate t;
    t.strands[0] = {over(c11), over(c12)};
    t.strands[1] = {over(c22), over(c21)};
    t.strands[2] = v1_up ? std::array{under(low1), under(high1)}
                         : std::array{under(high1), under(low1)};
    t.strands[3] = v1_up ? std::array{under(high2), under(low2)}
                         : std::array{under(low2), under(high2)};
    // sign(c_ij) = orientation of (h_i, v_j): h1 right over v1 up is positive.
    const Sign s = v1_up ? Sign::Positive : Sign::Negative;
    t.signs = {s, -s, -s, s};
    return t;
}

const std::array<std::array<BandStrand, 4>, 6>& band_pass_configurations() {
    using enum BandStrand;
    static const std::array<std::array<BandStrand, 4>, 6> configs{{
        {H1, H2, V1, V2},
        {H1, V1, V2, H2},
        {H1, V2, V1, H2},
        {H1, V2, H2, V1},
        {H1, H2, V2, V1},
        {H1, V1, H2, V2},
    }};
    return configs;
}

void check_band_pass_site(const LongGaussDiagram& d, const BandPassSite& site) {
    const auto got = match(d.spans(), d.signs(), site.variant, site.arrows);
    if (!got) throw IllegalMoveError("band-pass: arrows do not form the local picture");
    if (got->first != site.configuration || got->second != site.base_arc) {
        throw IllegalMoveError("band-pass: site is configuration " + std::to_string(got->first) +
                               " base " + std::to_string(got->second) + ", not " +
                               std::to_string(site.configuration) + " base " +
                               std::to_string(site.base_arc));
    }
}

std::optional<BandPassSite> locate_band_pass(const LongGaussDiagram& d,
                                             const std::array<ArrowId, 4>& arrows) {
    const auto spans = d.spans();
    std::array<ArrowId, 4> perm = arrows;
    std::sort(perm.begin(), perm.end());
    if (std::adjacent_find(perm.begin(), perm.end()) != perm.end()) return std::nullopt;
    do {
        for (BandPassVariant v : {BandPassVariant::First, BandPassVariant::Second}) {
            if (const auto got = match(spans, d.signs(), v, perm)) {
                return BandPassSite{perm, v, got->first, got->second};
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<BandPassSite> find_band_pass_sites(const LongGaussDiagram& d) {
    const Word& w = d.word();
    std::vector<std::pair<ArrowId, ArrowId>> over_blocks;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].role == Role::Over && w[i + 1].role == Role::Over) {
            over_blocks.emplace_back(w[i].arrow, w[i + 1].arrow);
        }
    }
    std::set<std::array<ArrowId, 4>> seen;
    std::vector<BandPassSite> out;
    for (std::size_t i = 0; i < over_blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < over_blocks.size(); ++j) {
            std::array<ArrowId, 4> set{over_blocks[i].first, over_blocks[i].second,
                                       over_blocks[j].first, over_blocks[j].second};
            std::sort(set.begin(), set.end());
            if (std::adjacent_find(set.begin(), set.end()) != set.end()) continue;
            if (!seen.insert(set).second) continue;
            if (auto site = locate_band_pass(d, set)) out.push_back(*site);
        }
    }
    return out;
}

LongGaussDiagram apply_band_pass(const LongGaussDiagram& d, const BandPassSite& site) {
    check_band_pass_site(d, site);
    Word word = d.word();
    SignMap signs = d.signs();
    for (Endpoint& e : word) {
        if (std::find(site.arrows.begin(), site.arrows.end(), e.arrow) != site.arrows.end()) {
            e.role = opposite(e.role);
        }
    }
    for (ArrowId a : site.arrows) signs[a] = -signs[a];
    return LongGaussDiagram(std::move(word), std::move(signs));
}

}  // namespace longknot
