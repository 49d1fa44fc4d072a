#include "longknot/laurent.hpp"

namespace longknot {

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient c) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

void LaurentPoly::add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<int, LaurentPoly::Coefficient>> LaurentPoly::term_list() const {
    return {terms_.begin(), terms_.end()};
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(Coefficient scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

std::string LaurentPoly::to_string(char variable) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest degree first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto [e, c] = *it;
        const Coefficient magnitude = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1 || e == 0) out += std::to_string(magnitude);
        if (e != 0) {
            out.push_back(variable);
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace longknot
