#include "khtor/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace khtor {

LaurentPoly::LaurentPoly(BigInt constant) {
    if (!constant.is_zero()) c_[0] = std::move(constant);
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, int exp) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.c_[exp] = std::move(coeff);
    return p;
}

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no degree");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no degree");
    return c_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? BigInt() : it->second;
}

void LaurentPoly::set_coeff(int exp, BigInt v) {
    if (v.is_zero())
        c_.erase(exp);
    else
        c_[exp] = std::move(v);
}

void LaurentPoly::add_term(int exp, const BigInt& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(exp, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_term(e, v);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, v] : o.c_) r.add_term(e, -v);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, v1] : c_)
        for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + k] = v;
    return r;
}

BigInt LaurentPoly::eval_int(long long x) const {
    if (c_.empty()) return BigInt();
    if (x == 1 || x == -1) {
        BigInt s;
        for (const auto& [e, v] : c_) {
            bool neg = (x == -1) && (e % 2 != 0);
            s += neg ? -v : v;
        }
        return s;
    }
    if (min_exp() < 0) throw std::logic_error("LaurentPoly: negative exponent in integer eval");
    BigInt s;
    BigInt bx(x);
    for (const auto& [e, v] : c_) s += v * BigInt::pow(bx, static_cast<unsigned long long>(e));
    return s;
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (c_.empty()) return LaurentPoly();
    int shift = -min_exp();
    LaurentPoly r = shifted(shift);
    if (r.c_.rbegin()->second.sign() < 0) r = -r;
    return r;
}

bool LaurentPoly::equals_up_to_units(const LaurentPoly& o) const {
    return unit_normalized() == o.unit_normalized();
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c_) {
        BigInt a = v;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        bool unit_coeff = a.is_one();
        if (e == 0) {
            os << a.to_string();
        } else {
            if (!unit_coeff) os << a.to_string() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace khtor
