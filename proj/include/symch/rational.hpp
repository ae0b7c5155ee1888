// rational.hpp -- arbitrary-precision integers and exact rationals.
//
// BigInt is sign + base-2^32 magnitude. Rational is always reduced
// (gcd(|num|, den) = 1, den >= 1) and never rounds.
#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace symch {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(std::string_view s);
    static BigInt factorial(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division (quotient rounds toward zero), as in C.
    // rem has the sign of the dividend. b must be nonzero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    bool operator==(const BigInt& b) const = default;
    std::strong_ordering operator<=>(const BigInt& b) const;

    static BigInt gcd(BigInt a, BigInt b);   // non-negative

    // Exact conversion; throws if the value does not fit.
    long long to_longlong() const;
    bool fits_longlong() const;

    std::string str() const;   // decimal

private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;   // little-endian base 2^32; empty means 0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b); // a >= b
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);   // reduces; throws on zero denominator
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_string(std::string_view s);   // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }
    bool is_integer() const { return den_ == BigInt(1); }
    bool is_negative() const { return num_.is_negative(); }

    Rational operator-() const;
    Rational inverse() const;   // throws on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    bool operator==(const Rational& b) const = default;
    std::strong_ordering operator<=>(const Rational& b) const;

    std::string str() const;   // "p" or "p/q"

private:
    BigInt num_;
    BigInt den_;   // > 0
    void reduce();
};

Rational rational_pow(const Rational& base, unsigned exp);

} // namespace symch
