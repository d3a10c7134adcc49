#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treearch {

namespace detail {

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
        unsigned __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Exact rational arithmetic
// ---------------------------------------------------------------------------

// Reduced fraction with a positive 64-bit denominator.  Intermediate products
// are carried in 128 bits and reduced before being range-checked back into 64,
// so chained angle arithmetic with the small denominators used by the layout
// algorithms never silently wraps.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        init(num, den);
    }

    // NOLINTNEXTLINE(google-explicit-constructor): integers are exact rationals
    Rational(std::int64_t num) : num_(num) {}

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational operator+(const Rational& o) const {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return make(n, d);
    }

    Rational operator-(const Rational& o) const {
        __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return make(n, d);
    }

    Rational operator*(const Rational& o) const {
        __int128 n = (__int128)num_ * o.num_;
        __int128 d = (__int128)den_ * o.den_;
        return make(n, d);
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        __int128 n = (__int128)num_ * o.den_;
        __int128 d = (__int128)den_ * o.num_;
        return make(n, d);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const noexcept {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }

    bool operator<(const Rational& o) const noexcept {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator>(const Rational& o) const noexcept { return o < *this; }
    bool operator<=(const Rational& o) const noexcept { return !(o < *this); }
    bool operator>=(const Rational& o) const noexcept { return !(*this < o); }

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Largest integer <= value.
    std::int64_t floor() const noexcept {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            r.num_ = 0;
            r.den_ = 1;
            return r;
        }
        unsigned __int128 an = n < 0 ? (unsigned __int128)(-n) : (unsigned __int128)n;
        unsigned __int128 g = detail::gcd128(an, (unsigned __int128)d);
        n /= (__int128)g;
        d /= (__int128)g;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: value out of 64-bit range");
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }

    void init(std::int64_t num, std::int64_t den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// ---------------------------------------------------------------------------
// Angles
// ---------------------------------------------------------------------------

// Direction or angle measured in turns (1 turn = 360 degrees = 2*pi radians),
// stored exactly as a rational canonicalized into [0, 1).  Keeping angles in
// turns makes every value the algorithms produce an exact fraction, so equal
// slopes compare equal and angular gaps sum to exactly one turn.
class TurnAngle {
public:
    TurnAngle() = default;

    explicit TurnAngle(const Rational& r) { assign(r); }

    static TurnAngle turns(std::int64_t num, std::int64_t den) {
        return TurnAngle(Rational(num, den));
    }

    // Canonical value in [0, 1).
    const Rational& value() const noexcept { return value_; }

    TurnAngle operator+(const TurnAngle& o) const { return TurnAngle(value_ + o.value_); }
    TurnAngle operator-(const TurnAngle& o) const { return TurnAngle(value_ - o.value_); }
    TurnAngle operator+(const Rational& r) const { return TurnAngle(value_ + r); }
    TurnAngle operator-(const Rational& r) const { return TurnAngle(value_ - r); }

    TurnAngle opposite() const { return *this + Rational(1, 2); }

    // Counterclockwise distance from `from` to `to`, in [0, 1).
    static TurnAngle gap(const TurnAngle& from, const TurnAngle& to) {
        return TurnAngle(to.value_ - from.value_);
    }

    bool operator==(const TurnAngle& o) const noexcept { return value_ == o.value_; }
    bool operator!=(const TurnAngle& o) const noexcept { return value_ != o.value_; }
    bool operator<(const TurnAngle& o) const noexcept { return value_ < o.value_; }
    bool operator>(const TurnAngle& o) const noexcept { return value_ > o.value_; }
    bool operator<=(const TurnAngle& o) const noexcept { return value_ <= o.value_; }
    bool operator>=(const TurnAngle& o) const noexcept { return value_ >= o.value_; }

    double radians() const noexcept { return value_.to_double() * 6.283185307179586476925286766559; }
    double degrees() const noexcept { return value_.to_double() * 360.0; }

    // Exact formatting of the angle in radians, e.g. "7π/12", "π/2", "0".
    std::string pi_string() const {
        Rational in_pi = value_ * Rational(2);
        if (in_pi.num() == 0) return "0";
        std::string s;
        if (in_pi.num() != 1) s += std::to_string(in_pi.num());
        s += "π";
        if (in_pi.den() != 1) s += "/" + std::to_string(in_pi.den());
        return s;
    }

    std::string str() const { return value_.str(); }

private:
    void assign(const Rational& r) {
        Rational wrapped = r - Rational(r.floor());
        value_ = wrapped;
    }

    Rational value_; // in [0, 1)
};

} // namespace treearch
