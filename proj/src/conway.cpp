#include "longknot/conway.hpp"

#include "longknot/gauss_code.hpp"
#include "longknot/operations.hpp"

#include <array>
#include <optional>
#include <set>

namespace longknot {

namespace {

// Darts: 2 * position + 0 for the incoming half-edge, + 1 for the outgoing one.
std::size_t in_dart(std::size_t pos) { return 2 * pos; }
std::size_t out_dart(std::size_t pos) { return 2 * pos + 1; }

std::size_t count_faces(const Word& word, const SignMap& signs) {
    const std::size_t m = word.size();
    std::map<ArrowId, ArrowSpan> spans;
    for (std::size_t i = 0; i < m; ++i) {
        auto& span = spans[word[i].arrow];
        (word[i].role == Role::Over ? span.over : span.under) = i;
    }
    // Counter-clockwise order of half-edges around each crossing.
    std::vector<std::size_t> rotate_next(2 * m);
    for (const auto& [arrow, span] : spans) {
        std::array<std::size_t, 4> ccw;
        if (signs.at(arrow) == Sign::Positive) {
            ccw = {out_dart(span.over), out_dart(span.under), in_dart(span.over),
                   in_dart(span.under)};
        } else {
            ccw = {out_dart(span.under), out_dart(span.over), in_dart(span.under),
                   in_dart(span.over)};
        }
        for (std::size_t k = 0; k < 4; ++k) rotate_next[ccw[k]] = ccw[(k + 1) % 4];
    }
    auto edge_partner = [m](std::size_t dart) {
        const std::size_t pos = dart / 2;
        return dart % 2 == 1 ? in_dart((pos + 1) % m) : out_dart((pos + m - 1) % m);
    };
    std::vector<bool> seen(2 * m, false);
    std::size_t faces = 0;
    for (std::size_t start = 0; start < 2 * m; ++start) {
        if (seen[start]) continue;
        ++faces;
        for (std::size_t dart = start; !seen[dart]; dart = rotate_next[edge_partner(dart)]) {
            seen[dart] = true;
        }
    }
    return faces;
}

LaurentPoly times_z(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(e + 1, c);
    return out;
}

class SkeinEvaluator {
public:
    LaurentPoly eval(const ClosedLinkCode& link) {
        const std::string key = memo_key(link);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        LaurentPoly result = eval_uncached(link);
        memo_.emplace(key, result);
        return result;
    }

private:
    static std::string memo_key(const ClosedLinkCode& link) {
        std::map<ArrowId, ArrowId> labels;
        for (const Word& w : link.components) {
            for (const Endpoint& e : w) {
                labels.try_emplace(e.arrow, static_cast<ArrowId>(labels.size() + 1));
            }
        }
        std::string key;
        for (const Word& w : link.components) {
            key += serialize_word(w, link.signs, labels);
            key.push_back('|');
        }
        return key;
    }

    LaurentPoly eval_uncached(const ClosedLinkCode& link) {
        std::optional<ArrowId> bad;
        std::set<ArrowId> seen;
        for (const Word& w : link.components) {
            for (const Endpoint& e : w) {
                if (!seen.insert(e.arrow).second) continue;
                if (e.role == Role::Under) {
                    bad = e.arrow;
                    break;
                }
            }
            if (bad) break;
        }
        if (!bad) {
            return link.components.size() == 1 ? LaurentPoly::monomial(0, 1) : LaurentPoly{};
        }
        const ArrowId c = *bad;
        const Sign s = link.signs.at(c);

        ClosedLinkCode switched = link;
        for (Word& w : switched.components) {
            for (Endpoint& e : w) {
                if (e.arrow == c) e.role = opposite(e.role);
            }
        }
        switched.signs[c] = -s;

        const LaurentPoly smoothed = times_z(eval(smooth(link, c)));
        LaurentPoly result = eval(switched);
        if (s == Sign::Positive) {
            result += smoothed;
        } else {
            result -= smoothed;
        }
        return result;
    }

    // Oriented resolution of crossing c.
    static ClosedLinkCode smooth(const ClosedLinkCode& link, ArrowId c) {
        std::vector<std::pair<std::size_t, std::size_t>> where;
        for (std::size_t k = 0; k < link.components.size(); ++k) {
            const Word& w = link.components[k];
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i].arrow == c) where.emplace_back(k, i);
            }
        }
        const auto [c1, i] = where[0];
        const auto [c2, j] = where[1];
        ClosedLinkCode out{link.components, link.signs};
        out.signs.erase(c);
        if (c1 == c2) {
            const Word& w = link.components[c1];
            Word inner(w.begin() + static_cast<std::ptrdiff_t>(i + 1),
                       w.begin() + static_cast<std::ptrdiff_t>(j));
            Word outer(w.begin() + static_cast<std::ptrdiff_t>(j + 1), w.end());
            outer.insert(outer.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            out.components[c1] = std::move(inner);
            out.components.push_back(std::move(outer));
        } else {
            const Word& a = link.components[c1];
            const Word& b = link.components[c2];
            Word merged(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
            merged.insert(merged.end(), b.begin() + static_cast<std::ptrdiff_t>(j + 1), b.end());
            merged.insert(merged.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
            merged.insert(merged.end(), a.begin() + static_cast<std::ptrdiff_t>(i + 1), a.end());
            out.components[c1] = std::move(merged);
            out.components.erase(out.components.begin() + static_cast<std::ptrdiff_t>(c2));
        }
        return out;
    }

    std::map<std::string, LaurentPoly> memo_;
};

}  // namespace

int carter_genus(const ClosedGaussDiagram& d) {
    const std::size_t n = d.arrow_count();
    if (n == 0) return 0;
    const std::size_t faces = count_faces(d.word(), d.signs());
    // V - E + F = 2 - 2g with V = n crossings and E = 2n edges.
    return static_cast<int>((2 + n - faces) / 2);
}

bool is_realizable(const ClosedGaussDiagram& d) { return carter_genus(d) == 0; }

LaurentPoly conway_polynomial(const ClosedLinkCode& link) {
    SkeinEvaluator evaluator;
    return evaluator.eval(link);
}

std::int64_t conway_c2(const LongGaussDiagram& d) {
    const ClosedGaussDiagram closed = closure(d);
    if (!is_realizable(closed)) {
        throw NotRealizableError("closure of " + serialize(d) + " is not a planar diagram");
    }
    return conway_polynomial(ClosedLinkCode{{d.word()}, d.signs()}).coefficient(2);
}

}  // namespace longknot
