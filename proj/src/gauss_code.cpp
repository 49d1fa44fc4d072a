#include "longknot/gauss_code.hpp"

#include <cctype>

namespace longknot {

namespace {

bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct LabelInfo {
    ArrowId id = 0;
    Sign sign = Sign::Positive;
    int occurrences = 0;
    bool has_over = false;
    bool has_under = false;
};

// Shared state for parsing one or more words that share a label namespace.
class CodeReader {
public:
    Word read_word(std::string_view text) {
        Word word;
        std::size_t i = 0;
        auto fail = [&](const std::string& what) {
            throw GaussCodeError("malformed token at offset " + std::to_string(i) + ": " + what);
        };
        while (true) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
            if (i >= text.size()) break;
            Role role;
            if (text[i] == 'O') {
                role = Role::Over;
            } else if (text[i] == 'U') {
                role = Role::Under;
            } else {
                fail("expected 'O' or 'U'");
            }
            ++i;
            skip_space(text, i);
            std::string label;
            while (i < text.size() && is_label_char(text[i])) label.push_back(text[i++]);
            if (label.empty()) fail("missing label");
            skip_space(text, i);
            if (i >= text.size() || text[i] != '(') fail("expected '('");
            ++i;
            skip_space(text, i);
            Sign sign;
            if (i < text.size() && text[i] == '+') {
                sign = Sign::Positive;
                ++i;
            } else if (i < text.size() && text[i] == '-') {
                sign = Sign::Negative;
                ++i;
            } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
                sign = Sign::Negative;
                i += 3;
            } else {
                fail("expected sign '+' or '-'");
            }
            skip_space(text, i);
            if (i >= text.size() || text[i] != ')') fail("expected ')'");
            ++i;
            word.push_back(record(label, role, sign));
        }
        return word;
    }

    SignMap finish() const {
        SignMap signs;
        for (const auto& [label, info] : labels_) {
            if (info.occurrences != 2) {
                throw GaussCodeError("unmatched label '" + label + "' (appears " +
                                     std::to_string(info.occurrences) + " time(s))");
            }
            signs.emplace(info.id, info.sign);
        }
        return signs;
    }

private:
    static void skip_space(std::string_view text, std::size_t& i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) != 0) ++i;
    }

    Endpoint record(const std::string& label, Role role, Sign sign) {
        auto [it, inserted] = labels_.try_emplace(label);
        LabelInfo& info = it->second;
        if (inserted) {
            info.id = next_id_++;
            info.sign = sign;
        } else if (info.sign != sign) {
            throw GaussCodeError("contradictory signs for label '" + label + "'");
        }
        if (++info.occurrences > 2) {
            throw GaussCodeError("unmatched label '" + label + "' (appears more than twice)");
        }
        bool& slot = role == Role::Over ? info.has_over : info.has_under;
        if (slot) {
            throw GaussCodeError("duplicate role " + std::string(1, role_char(role)) +
                                 " for label '" + label + "'");
        }
        slot = true;
        return Endpoint{info.id, role};
    }

    std::map<std::string, LabelInfo> labels_;
    ArrowId next_id_ = 1;
};

void number_word(const Word& word, std::map<ArrowId, ArrowId>& labels) {
    for (const Endpoint& e : word) {
        labels.try_emplace(e.arrow, static_cast<ArrowId>(labels.size() + 1));
    }
}

Word relabel(const Word& word, const std::map<ArrowId, ArrowId>& labels) {
    Word out;
    out.reserve(word.size());
    for (const Endpoint& e : word) out.push_back(Endpoint{labels.at(e.arrow), e.role});
    return out;
}

SignMap relabel(const SignMap& signs, const std::map<ArrowId, ArrowId>& labels) {
    SignMap out;
    for (const auto& [arrow, sign] : signs) out.emplace(labels.at(arrow), sign);
    return out;
}

}  // namespace

LongGaussDiagram parse_gauss_code(std::string_view text) {
    CodeReader reader;
    Word word = reader.read_word(text);
    SignMap signs = reader.finish();
    return LongGaussDiagram(std::move(word), std::move(signs));
}

std::string serialize_word(const Word& word, const SignMap& signs,
                           const std::map<ArrowId, ArrowId>& labels) {
    std::string out;
    out.reserve(word.size() * 5);
    for (const Endpoint& e : word) {
        out.push_back(role_char(e.role));
        out += std::to_string(labels.at(e.arrow));
        out.push_back('(');
        out.push_back(sign_char(signs.at(e.arrow)));
        out.push_back(')');
    }
    return out;
}

std::string serialize(const LongGaussDiagram& d) {
    std::map<ArrowId, ArrowId> labels;
    number_word(d.word(), labels);
    return serialize_word(d.word(), d.signs(), labels);
}

LongGaussDiagram renumber(const LongGaussDiagram& d) {
    std::map<ArrowId, ArrowId> labels;
    number_word(d.word(), labels);
    return LongGaussDiagram(relabel(d.word(), labels), relabel(d.signs(), labels));
}

LinkGaussDiagram parse_link_code(std::string_view text) {
    CodeReader reader;
    std::vector<Word> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        parts.push_back(reader.read_word(text.substr(start, bar == std::string_view::npos
                                                                ? std::string_view::npos
                                                                : bar - start)));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    SignMap signs = reader.finish();
    Word long_component = std::move(parts.front());
    parts.erase(parts.begin());
    return LinkGaussDiagram(std::move(long_component), std::move(parts), std::move(signs));
}

std::string serialize(const LinkGaussDiagram& l) {
    std::map<ArrowId, ArrowId> labels;
    for (const Word& w : l.components()) number_word(w, labels);
    std::string out;
    bool first = true;
    for (const Word& w : l.components()) {
        if (!first) out.push_back('|');
        first = false;
        out += serialize_word(w, l.signs(), labels);
    }
    return out;
}

LinkGaussDiagram renumber(const LinkGaussDiagram& l) {
    std::map<ArrowId, ArrowId> labels;
    for (const Word& w : l.components()) number_word(w, labels);
    std::vector<Word> circles;
    for (const Word& w : l.circles()) circles.push_back(relabel(w, labels));
    return LinkGaussDiagram(relabel(l.long_component(), labels), std::move(circles),
                            relabel(l.signs(), labels));
}

}  // namespace longknot
