#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace longknot {

/// Integer Laurent polynomial in one variable. Zero coefficients are never
/// stored, so the empty map is the zero polynomial.
class LaurentPoly {
public:
    using Coefficient = std::int64_t;

    LaurentPoly() = default;
    /// c * t^exponent
    static LaurentPoly monomial(int exponent, Coefficient c);

    void add_term(int exponent, Coefficient c);

    Coefficient coefficient(int exponent) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<int, Coefficient>& terms() const noexcept { return terms_; }
    /// [exponent, coefficient] pairs sorted by exponent.
    std::vector<std::pair<int, Coefficient>> term_list() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(Coefficient scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(Coefficient s, LaurentPoly p) { return p *= s; }
    friend LaurentPoly operator-(LaurentPoly p) { return p *= -1; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Human readable, e.g. "2t", "t^-1 - 3", "0".
    std::string to_string(char variable = 't') const;

private:
    std::map<int, Coefficient> terms_;
};

}  // namespace longknot
