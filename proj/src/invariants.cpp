#include "longknot/invariants.hpp"

#include "longknot/gauss_code.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

namespace longknot {

namespace {

void require_size_for_degree(std::size_t n, std::size_t k) {
    if (k > 2 && n > max_arrows_for_high_degree) {
        throw std::invalid_argument("subdiagram enumeration of degree " + std::to_string(k) +
                                    " is limited to " +
                                    std::to_string(max_arrows_for_high_degree) + " arrows");
    }
}

// Ordered embedding of a pattern word into a diagram word. Every embedding
// corresponds to exactly one subdiagram equal to the pattern.
class EmbeddingSearch {
public:
    EmbeddingSearch(const ArrowPattern& pattern, const LongGaussDiagram& d)
        : pattern_(pattern), d_(d), spans_(d.spans()),
          assigned_(pattern.arrow_count() + 1, 0) {}

    std::int64_t run() {
        total_ = 0;
        search(0, 0, 1);
        return total_;
    }

private:
    void search(std::size_t i, std::size_t next_pos, std::int64_t weight) {
        const Word& pat = pattern_.word();
        const Word& word = d_.word();
        if (i == pat.size()) {
            total_ += weight;
            return;
        }
        if (pat.size() - i > word.size() - next_pos) return;
        const Endpoint& want = pat[i];
        if (ArrowId a = assigned_[want.arrow]; a != 0) {
            const ArrowSpan& span = spans_.at(a);
            const std::size_t pos = want.role == Role::Over ? span.over : span.under;
            if (pos >= next_pos) search(i + 1, pos + 1, weight);
            return;
        }
        for (std::size_t pos = next_pos; pos < word.size(); ++pos) {
            const Endpoint& have = word[pos];
            if (have.role != want.role) continue;
            // A pattern arrow's first occurrence must map to a first occurrence.
            if (spans_.at(have.arrow).first() != pos) continue;
            if (std::find(assigned_.begin(), assigned_.end(), have.arrow) != assigned_.end()) {
                continue;
            }
            const Sign s = d_.sign(have.arrow);
            std::int64_t w = weight;
            if (const auto& constraint = pattern_.sign_constraint()) {
                if (constraint->at(want.arrow) != s) continue;
            } else {
                w *= to_int(s);
            }
            assigned_[want.arrow] = have.arrow;
            search(i + 1, pos + 1, w);
            assigned_[want.arrow] = 0;
        }
    }

    const ArrowPattern& pattern_;
    const LongGaussDiagram& d_;
    std::map<ArrowId, ArrowSpan> spans_;
    std::vector<ArrowId> assigned_;  // pattern arrow id -> diagram arrow id, 0 if free
    std::int64_t total_ = 0;
};

// O(n^2) pairing for two-arrow patterns: classify every arrow pair directly.
std::int64_t pair_two_arrow(const ArrowPattern& pattern, const LongGaussDiagram& d) {
    const auto spans = d.spans();
    std::vector<std::pair<ArrowId, ArrowSpan>> list(spans.begin(), spans.end());
    const Word& pat = pattern.word();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            std::array<std::pair<std::size_t, Endpoint>, 4> ends{{
                {list[i].second.over, {list[i].first, Role::Over}},
                {list[i].second.under, {list[i].first, Role::Under}},
                {list[j].second.over, {list[j].first, Role::Over}},
                {list[j].second.under, {list[j].first, Role::Under}},
            }};
            std::sort(ends.begin(), ends.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            const ArrowId first = ends[0].second.arrow;
            bool match = true;
            for (std::size_t k = 0; k < 4 && match; ++k) {
                const ArrowId label = ends[k].second.arrow == first ? 1 : 2;
                match = pat[k].arrow == label && pat[k].role == ends[k].second.role;
            }
            if (!match) continue;
            const ArrowId second = first == list[i].first ? list[j].first : list[i].first;
            const Sign s1 = d.sign(first);
            const Sign s2 = d.sign(second);
            if (const auto& constraint = pattern.sign_constraint()) {
                if (constraint->at(1) == s1 && constraint->at(2) == s2) ++total;
            } else {
                total += to_int(s1) * to_int(s2);
            }
        }
    }
    return total;
}

}  // namespace

ArrowPattern::ArrowPattern(Word word, std::optional<SignMap> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {}

ArrowPattern ArrowPattern::unsigned_pattern(std::string_view text) {
    // Reuse the Gauss-code reader by attaching a dummy sign to every token.
    std::string signed_text;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == 'O' || c == 'U') && !signed_text.empty()) signed_text += "(+)";
        signed_text.push_back(c);
    }
    if (!signed_text.empty()) signed_text += "(+)";
    const LongGaussDiagram d = renumber(parse_gauss_code(signed_text));
    return ArrowPattern(d.word(), std::nullopt);
}

ArrowPattern ArrowPattern::signed_pattern(const LongGaussDiagram& d) {
    const LongGaussDiagram r = renumber(d);
    return ArrowPattern(r.word(), r.signs());
}

std::string ArrowPattern::to_string() const {
    if (signs_) return serialize(LongGaussDiagram(word_, *signs_));
    std::string out;
    for (const Endpoint& e : word_) {
        out.push_back(role_char(e.role));
        out += std::to_string(e.arrow);
    }
    return out;
}

const ArrowPattern& v21_pattern() {
    static const ArrowPattern p = ArrowPattern::unsigned_pattern("O1U2U1O2");
    return p;
}

const ArrowPattern& v22_pattern() {
    static const ArrowPattern p = ArrowPattern::unsigned_pattern("U1O2O1U2");
    return p;
}

void for_each_subdiagram(const LongGaussDiagram& d, std::size_t k,
                         const std::function<void(const LongGaussDiagram&)>& visit) {
    const std::vector<ArrowId> arrows = d.arrows();
    const std::size_t n = arrows.size();
    if (k > n) throw std::invalid_argument("subdiagram size exceeds arrow count");
    require_size_for_degree(n, k);
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::vector<bool> keep_index(n, false);
        SignMap signs;
        for (std::size_t i : pick) {
            keep_index[i] = true;
            signs.emplace(arrows[i], d.sign(arrows[i]));
        }
        Word word;
        word.reserve(2 * k);
        for (const Endpoint& e : d.word()) {
            if (signs.contains(e.arrow)) word.push_back(e);
        }
        visit(LongGaussDiagram(std::move(word), std::move(signs)));
        // Advance to the next k-combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<LongGaussDiagram> subdiagrams(const LongGaussDiagram& d, std::size_t k) {
    std::vector<LongGaussDiagram> out;
    for_each_subdiagram(d, k, [&](const LongGaussDiagram& sub) { out.push_back(sub); });
    return out;
}

std::int64_t pairing(const ArrowPattern& p, const LongGaussDiagram& d) {
    const std::size_t k = p.arrow_count();
    if (k > d.arrow_count()) return 0;
    if (k == 0) return 1;
    if (k == 2) return pair_two_arrow(p, d);
    require_size_for_degree(d.arrow_count(), k);
    return EmbeddingSearch(p, d).run();
}

std::int64_t v21(const LongGaussDiagram& d) { return pairing(v21_pattern(), d); }

std::int64_t v22(const LongGaussDiagram& d) { return pairing(v22_pattern(), d); }

int beta(const LongGaussDiagram& d) {
    return static_cast<int>(std::llabs(v21(d) + v22(d)) % 2);
}

std::int64_t arrow_index(const LongGaussDiagram& d, ArrowId arrow) {
    const auto spans = d.spans();
    const ArrowSpan& span = spans.at(arrow);
    std::int64_t index = 0;
    for (std::size_t pos = span.first() + 1; pos < span.last(); ++pos) {
        const Endpoint& e = d.word()[pos];
        const int s = to_int(d.sign(e.arrow));
        index += e.role == Role::Over ? s : -s;
    }
    return index;
}

LaurentPoly w_polynomial(const LongGaussDiagram& d) {
    const Word& word = d.word();
    // prefix[i] = signed endpoint count over word[0, i)
    std::vector<std::int64_t> prefix(word.size() + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int s = to_int(d.sign(word[i].arrow));
        prefix[i + 1] = prefix[i] + (word[i].role == Role::Over ? s : -s);
    }
    LaurentPoly w;
    for (const auto& [arrow, span] : d.spans()) {
        const std::int64_t index = prefix[span.last()] - prefix[span.first() + 1];
        if (index != 0) {
            w.add_term(static_cast<int>(std::llabs(index)), to_int(d.sign(arrow)));
        }
    }
    return w;
}

InvariantReport report(const LongGaussDiagram& d) {
    InvariantReport r;
    r.v21 = v21(d);
    r.v22 = v22(d);
    r.beta = static_cast<int>(std::llabs(r.v21 + r.v22) % 2);
    r.w = w_polynomial(d);
    return r;
}

}  // namespace longknot
