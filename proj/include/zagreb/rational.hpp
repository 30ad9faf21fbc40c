#pragma once

#include <cstdint>
#include <string>

#include "zagreb/errors.hpp"

namespace zagreb {

// All index arithmetic runs in overflow-checked signed 128-bit integers.
// Overflow throws instead of wrapping; exactness is the whole point.
using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int128 addition overflow");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("int128 subtraction overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int128 multiplication overflow");
    return r;
}

inline int128 checked_neg(int128 a) { return checked_sub(0, a); }

inline int128 abs128(int128 a) { return a < 0 ? checked_neg(a) : a; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // build digits from the absolute value; negate digit-wise to dodge the
    // INT128_MIN edge case
    std::string s;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        if (digit < 0) digit = -digit;
        s.push_back(static_cast<char>('0' + digit));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::string out(s.rbegin(), s.rend());
    return out;
}

inline std::int64_t to_int64(int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

/// Exact fraction of checked 128-bit integers, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int128 value) : num_(value), den_(1) {}     // NOLINT: implicit by design
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT
    Rational(long value) : num_(value), den_(1) {}       // NOLINT
    Rational(int value) : num_(value), den_(1) {}        // NOLINT
    Rational(int128 num, int128 den) : num_(num), den_(den) { normalize(); }

    int128 numerator() const { return num_; }
    int128 denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        // reduce via the gcd of denominators before cross-multiplying
        int128 g = gcd128(a.den_, b.den_);
        int128 bd = b.den_ / g;
        int128 num = checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, a.den_ / g));
        int128 den = checked_mul(a.den_, bd);
        return Rational(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        int128 g1 = gcd128(a.num_, b.den_);
        int128 g2 = gcd128(b.num_, a.den_);
        int128 num = checked_mul(a.num_ / g1, b.num_ / g2);
        int128 den = checked_mul(a.den_ / g2, b.den_ / g1);
        return Rational(num, den);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw bad_parameter_error("division by zero rational");
        return a * Rational(b.den_, b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // both reduced
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return zagreb::to_string(num_);
        return zagreb::to_string(num_) + "/" + zagreb::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw bad_parameter_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        int128 g = gcd128(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    int128 num_;
    int128 den_;
};

} // namespace zagreb
