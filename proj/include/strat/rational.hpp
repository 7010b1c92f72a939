#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <string>

#include "strat/errors.hpp"

namespace strat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_fraction_string(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (boost::multiprecision::denominator(q) != 1)
        s += "/" + boost::multiprecision::denominator(q).str();
    return s;
}

// Normalized fraction of int64 components. Every operation checks for 64-bit
// overflow and throws SmallRationalOverflow; the elimination driver then
// restarts the whole computation over cpp_rational. On the boundary matrices
// this toolkit produces, entries essentially never leave the int64 range, so
// this is the path that actually runs.
class Rat64 {
public:
    Rat64() = default;
    Rat64(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) { normalize(); }

    static Rat64 from_int(std::int64_t n) { return Rat64(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_unit() const { return den_ == 1 && (num_ == 1 || num_ == -1); }

    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        Rat64 r;
        r.num_ = checked_mul(a.num_, b.num_);
        r.den_ = checked_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num_ == 0) throw ValidationError("division by zero");
        Rat64 r;
        r.num_ = checked_mul(a.num_, b.den_);
        r.den_ = checked_mul(a.den_, b.num_);
        r.normalize();
        return r;
    }
    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        Rat64 r;
        r.num_ = checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
        r.den_ = checked_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        Rat64 r;
        r.num_ = checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_));
        r.den_ = checked_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }
    Rat64 operator-() const {
        Rat64 r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Rational to_rational() const { return Rational(num_, den_); }

private:
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw SmallRationalOverflow();
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw SmallRationalOverflow();
        return r;
    }
    static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw SmallRationalOverflow();
        return r;
    }
    void normalize() {
        if (den_ == 0) throw ValidationError("zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = checked_sub(0, num_);
            den_ = checked_sub(0, den_);
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace strat
