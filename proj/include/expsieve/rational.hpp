#pragma once

// Exact rational arithmetic on 128-bit integers. Operands are cross-reduced
// before multiplying and every product is overflow-checked, so results are
// either exact or an overflow_error -- never silently wrong.

#include <stdexcept>
#include <string>

#include "expsieve/base.hpp"

namespace expsieve {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    i128 num() const { return num_; }
    i128 den() const { return den_; }

    Rational operator+(const Rational& o) const {
        i128 g = gcd128(den_, o.den_);
        i128 lhs = checked_mul(num_, o.den_ / g);
        i128 rhs = checked_mul(o.num_, den_ / g);
        Rational r;
        r.num_ = checked_add(lhs, rhs);
        r.den_ = checked_mul(den_ / g, o.den_);
        r.normalize();
        return r;
    }
    Rational operator-(const Rational& o) const { return *this + o.negated(); }
    Rational operator*(const Rational& o) const {
        i128 g1 = gcd128(num_, o.den_);
        i128 g2 = gcd128(o.num_, den_);
        Rational r;
        r.num_ = checked_mul(num_ / g1, o.num_ / g2);
        r.den_ = checked_mul(den_ / g2, o.den_ / g1);
        r.normalize();
        return r;
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        Rational inv;
        inv.num_ = o.den_;
        inv.den_ = o.num_;
        inv.normalize();
        return *this * inv;
    }
    Rational negated() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "num/den"; integers still carry the "/1" so the format is uniform.
    std::string str() const { return i128_str(num_) + "/" + i128_str(den_); }

    static Rational parse(const std::string& text);

private:
    i128 num_;
    i128 den_;  // > 0 after normalize()

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        i128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    static i128 checked_mul(i128 a, i128 b) {
        i128 r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
        return r;
    }
    static i128 checked_add(i128 a, i128 b) {
        i128 r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: overflow");
        return r;
    }

    static std::string i128_str(i128 x) {
        if (x == 0) return "0";
        bool neg = x < 0;
        u128 v = neg ? static_cast<u128>(-x) : static_cast<u128>(x);
        std::string s;
        while (v) {
            s += static_cast<char>('0' + static_cast<int>(v % 10));
            v /= 10;
        }
        if (neg) s += '-';
        return {s.rbegin(), s.rend()};
    }
};

inline Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    long long num = 0, den = 1;
    try {
        num = std::stoll(slash == std::string::npos ? text : text.substr(0, slash));
        if (slash != std::string::npos) den = std::stoll(text.substr(slash + 1));
    } catch (const std::logic_error&) {
        throw validation_error("cannot parse rational: " + text);
    }
    return Rational(num, den);
}

}  // namespace expsieve
