#include "longknot/operations.hpp"

#include "longknot/gauss_code.hpp"

#include <algorithm>
#include <limits>

namespace longknot {

ClosedGaussDiagram closure(const LongGaussDiagram& d) {
    return ClosedGaussDiagram(d.word(), d.signs());
}

LongGaussDiagram concatenate(const LongGaussDiagram& k1, const LongGaussDiagram& k2) {
    const ArrowId offset = k1.max_arrow_id();
    Word word = k1.word();
    word.reserve(k1.word().size() + k2.word().size());
    for (const Endpoint& e : k2.word()) word.push_back(Endpoint{e.arrow + offset, e.role});
    SignMap signs = k1.signs();
    for (const auto& [arrow, sign] : k2.signs()) signs.emplace(arrow + offset, sign);
    return LongGaussDiagram(std::move(word), std::move(signs));
}

LongGaussDiagram inverse(const LongGaussDiagram& k) {
    Word word(k.word().rbegin(), k.word().rend());
    SignMap signs;
    for (const auto& [arrow, sign] : k.signs()) signs.emplace(arrow, -sign);
    return LongGaussDiagram(std::move(word), std::move(signs));
}

LongGaussDiagram power(const LongGaussDiagram& k, unsigned m) {
    LongGaussDiagram out;
    for (unsigned i = 0; i < m; ++i) out = concatenate(out, k);
    return out;
}

LongGaussDiagram rotate_base_point(const LongGaussDiagram& d, std::size_t shift) {
    Word word = d.word();
    if (!word.empty()) {
        std::rotate(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(shift % word.size()),
                    word.end());
    }
    return LongGaussDiagram(std::move(word), d.signs());
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

LongGaussDiagram random_diagram(std::size_t n_arrows, std::mt19937_64& rng) {
    Word word;
    word.reserve(2 * n_arrows);
    SignMap signs;
    for (ArrowId a = 1; a <= n_arrows; ++a) {
        word.push_back(Endpoint{a, Role::Over});
        word.push_back(Endpoint{a, Role::Under});
        signs.emplace(a, uniform_below(rng, 2) == 0 ? Sign::Positive : Sign::Negative);
    }
    for (std::size_t i = word.size(); i > 1; --i) {
        std::swap(word[i - 1], word[uniform_below(rng, i)]);
    }
    return renumber(LongGaussDiagram(std::move(word), std::move(signs)));
}

LongGaussDiagram random_diagram(std::size_t n_arrows, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_diagram(n_arrows, rng);
}

}  // namespace longknot
