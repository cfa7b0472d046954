#pragma once

#include <map>
#include <string>

#include "khtor/bigint.hpp"

namespace khtor {

// Laurent polynomial in one variable with BigInt coefficients.
// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(BigInt constant);
    static LaurentPoly monomial(BigInt coeff, int exp);

    bool is_zero() const { return c_.empty(); }
    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;
    BigInt coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return c_; }

    void set_coeff(int exp, BigInt v);
    void add_term(int exp, const BigInt& v);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

    LaurentPoly shifted(int k) const;  // multiply by x^k
    BigInt eval_int(long long x) const;  // requires min_exp() >= 0 or x = +-1

    // Multiplies by the unit +-x^k that brings min_exp to 0 and makes the
    // top-degree coefficient positive.  Canonical representative of the
    // equivalence class "equal up to units".
    LaurentPoly unit_normalized() const;
    bool equals_up_to_units(const LaurentPoly& o) const;

    // Rendering like "t^-1 - 1 + t" with the given variable name.
    std::string to_string(const std::string& var) const;

private:
    std::map<int, BigInt> c_;
};

}  // namespace khtor
