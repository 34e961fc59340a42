#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgm {

using BigInt = boost::multiprecision::cpp_int;

// Element of GF(3), stored as a residue in {0, 1, 2}. Printed as {0, 1, -1}.
class Gf3 {
public:
    constexpr Gf3() = default;
    constexpr Gf3(int x) : v_(static_cast<std::uint8_t>(((x % 3) + 3) % 3)) {}

    constexpr int residue() const { return v_; }
    // Signed representative in {-1, 0, 1}.
    constexpr int to_int() const { return v_ == 2 ? -1 : v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    // Every nonzero element is its own inverse.
    Gf3 inverse() const;

    friend constexpr Gf3 operator+(Gf3 a, Gf3 b) { return Gf3(a.v_ + b.v_); }
    friend constexpr Gf3 operator-(Gf3 a, Gf3 b) { return Gf3(a.v_ + 3 - b.v_); }
    friend constexpr Gf3 operator*(Gf3 a, Gf3 b) { return Gf3(a.v_ * b.v_); }
    friend Gf3 operator/(Gf3 a, Gf3 b) { return a * b.inverse(); }
    constexpr Gf3 operator-() const { return Gf3(3 - v_); }
    Gf3& operator+=(Gf3 o) { return *this = *this + o; }
    Gf3& operator-=(Gf3 o) { return *this = *this - o; }
    Gf3& operator*=(Gf3 o) { return *this = *this * o; }

    friend constexpr bool operator==(Gf3, Gf3) = default;
    friend constexpr auto operator<=>(Gf3, Gf3) = default;

    std::string to_string() const;
    // Accepts "0", "1", "2", "-1" (and any integer, reduced mod 3).
    static Gf3 parse(const std::string& text);

private:
    std::uint8_t v_ = 0;
};

// Dyadic rational numerator * 2^exponent with odd numerator, or zero as (0, 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long x);
    Dyadic(BigInt numerator, long long exponent);

    static Dyadic pow2(long long k) { return Dyadic(1, k); }

    const BigInt& numerator() const { return num_; }
    long long exponent() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    // True for the units of the dyadic ring, i.e. +-2^k.
    bool is_unit() const { return num_ == 1 || num_ == -1; }
    int sign() const { return num_.sign(); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    // Exact quotient. Throws NonDyadicDivision when the result would leave
    // Z[1/2] and DivisionByZero for a zero divisor.
    friend Dyadic operator/(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const;
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
    Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }
    Dyadic inverse() const { return Dyadic(1) / *this; }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

    // Residue of the value modulo an odd prime p, in [0, p).
    long long mod_p(long long p) const;

    // Integers print plainly; proper fractions print as "a/2^b".
    std::string to_string() const;
    // Accepts integers, "a/2^b" and "a/d" with d a power of two.
    static Dyadic parse(const std::string& text);

private:
    void canonicalize();

    BigInt num_ = 0;
    long long exp_ = 0;
};

}  // namespace sgm
