#include "longknot/diagram.hpp"

#include "longknot/gauss_code.hpp"

#include <algorithm>
#include <array>

namespace longknot {

void validate_components(std::span<const Word> components, const SignMap& signs) {
    // seen[arrow] = {over count, under count}
    std::map<ArrowId, std::array<int, 2>> seen;
    for (const Word& word : components) {
        for (const Endpoint& e : word) {
            auto& counts = seen[e.arrow];
            ++counts[e.role == Role::Over ? 0 : 1];
        }
    }
    for (const auto& [arrow, counts] : seen) {
        if (counts[0] != 1 || counts[1] != 1) {
            throw DiagramError("arrow " + std::to_string(arrow) +
                               " must have exactly one Over and one Under endpoint");
        }
        if (!signs.contains(arrow)) {
            throw DiagramError("arrow " + std::to_string(arrow) + " has no sign");
        }
    }
    if (signs.size() != seen.size()) {
        throw DiagramError("sign map has entries for arrows that do not occur in the word");
    }
}

LongGaussDiagram::LongGaussDiagram(Word word, SignMap signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    validate_components(std::span<const Word>(&word_, 1), signs_);
}

Sign LongGaussDiagram::sign(ArrowId arrow) const {
    auto it = signs_.find(arrow);
    if (it == signs_.end()) {
        throw DiagramError("no arrow " + std::to_string(arrow));
    }
    return it->second;
}

std::vector<ArrowId> LongGaussDiagram::arrows() const {
    std::vector<ArrowId> out;
    out.reserve(signs_.size());
    for (const auto& [arrow, sign] : signs_) out.push_back(arrow);
    return out;
}

ArrowId LongGaussDiagram::max_arrow_id() const noexcept {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

std::map<ArrowId, ArrowSpan> LongGaussDiagram::spans() const {
    std::map<ArrowId, ArrowSpan> out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        auto& span = out[word_[i].arrow];
        (word_[i].role == Role::Over ? span.over : span.under) = i;
    }
    return out;
}

ClosedGaussDiagram::ClosedGaussDiagram(Word word, SignMap signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    validate_components(std::span<const Word>(&word_, 1), signs_);
}

std::string ClosedGaussDiagram::canonical_code() const {
    std::string best;
    for (std::size_t shift = 0; shift < std::max<std::size_t>(word_.size(), 1); ++shift) {
        Word rotated(word_.size());
        std::rotate_copy(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(shift),
                         word_.end(), rotated.begin());
        std::string code = serialize(LongGaussDiagram(std::move(rotated), signs_));
        if (shift == 0 || code < best) best = std::move(code);
    }
    return best;
}

LinkGaussDiagram::LinkGaussDiagram(const LongGaussDiagram& knot)
    : components_{knot.word()}, signs_(knot.signs()) {}

LinkGaussDiagram::LinkGaussDiagram(Word long_component, std::vector<Word> circles, SignMap signs)
    : signs_(std::move(signs)) {
    components_.reserve(circles.size() + 1);
    components_.push_back(std::move(long_component));
    for (Word& circle : circles) components_.push_back(std::move(circle));
    validate_components(components_, signs_);
}

LinkGaussDiagram::LinkGaussDiagram(std::vector<Word> components, SignMap signs)
    : components_(std::move(components)), signs_(std::move(signs)) {
    if (components_.empty()) {
        throw DiagramError("a link needs its long component");
    }
    validate_components(components_, signs_);
}

const Word& LinkGaussDiagram::component(std::size_t index) const {
    if (index >= components_.size()) {
        throw DiagramError("no component " + std::to_string(index));
    }
    return components_[index];
}

Sign LinkGaussDiagram::sign(ArrowId arrow) const {
    auto it = signs_.find(arrow);
    if (it == signs_.end()) {
        throw DiagramError("no arrow " + std::to_string(arrow));
    }
    return it->second;
}

ArrowId LinkGaussDiagram::max_arrow_id() const noexcept {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

LongGaussDiagram LinkGaussDiagram::to_long() const {
    if (!is_knot()) {
        throw DiagramError("link has circle components; not a long knot");
    }
    return LongGaussDiagram(components_.front(), signs_);
}

}  // namespace longknot
