#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <iosfwd>

namespace lcslab {

// Arbitrary-precision signed integer. Values that fit in int64 are kept
// inline; larger magnitudes spill into a base-2^32 limb vector.
class Int {
public:
    Int() = default;
    Int(long long v) : small_(v) {}
    Int(int v) : small_(v) {}

    static Int from_string(std::string_view s);

    bool is_zero() const { return big_sign_ == 0 && small_ == 0; }
    bool is_one() const { return big_sign_ == 0 && small_ == 1; }
    int sign() const;
    bool fits_int64() const { return big_sign_ == 0; }
    long long to_int64() const; // precondition: fits_int64()

    Int operator-() const;
    Int abs() const;

    friend Int operator+(const Int& a, const Int& b);
    friend Int operator-(const Int& a, const Int& b);
    friend Int operator*(const Int& a, const Int& b);
    // Truncated division (C++ semantics): a == q*b + r, |r| < |b|, sign(r) == sign(a).
    friend Int operator/(const Int& a, const Int& b);
    friend Int operator%(const Int& a, const Int& b);
    static void divmod(const Int& a, const Int& b, Int& q, Int& r);

    Int& operator+=(const Int& b) { *this = *this + b; return *this; }
    Int& operator-=(const Int& b) { *this = *this - b; return *this; }
    Int& operator*=(const Int& b) { *this = *this * b; return *this; }

    friend bool operator==(const Int& a, const Int& b);
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }
    friend bool operator>(const Int& a, const Int& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const Int& a, const Int& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Int& a, const Int& b) { return cmp(a, b) >= 0; }
    static int cmp(const Int& a, const Int& b);

    static Int gcd(const Int& a, const Int& b); // nonnegative
    static Int pow(const Int& base, unsigned long long e);

    std::string to_string() const;

private:
    using Mag = std::vector<std::uint32_t>;

    long long small_ = 0;
    int big_sign_ = 0; // 0 => inline representation is authoritative
    Mag mag_;          // nonempty iff big_sign_ != 0

    bool is_big() const { return big_sign_ != 0; }
    Mag magnitude() const;                 // |value| as limbs
    static Int make(int sign, Mag mag);    // canonicalizes (demotes when small)

    static int cmp_mag(const Mag& a, const Mag& b);
    static Mag add_mag(const Mag& a, const Mag& b);
    static Mag sub_mag(const Mag& a, const Mag& b); // a >= b
    static Mag mul_mag(const Mag& a, const Mag& b);
    static void divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r);
};

std::ostream& operator<<(std::ostream& os, const Int& v);

// Exact rational number, always stored reduced with positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Int d);           // normalizes; throws on zero denominator
    Rat(long long n, long long d) : Rat(Int(n), Int(d)) {}

    // Parses "p" or "p/q".
    static Rat from_string(std::string_view s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat inverse() const; // throws on zero

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);

    std::string to_string() const;

private:
    Int num_, den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rat& v);

} // namespace lcslab
