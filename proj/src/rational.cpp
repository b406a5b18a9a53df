#include "lcslab/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace lcslab {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

void trim(std::vector<std::uint32_t>& m)
{
    while (!m.empty() && m.back() == 0) m.pop_back();
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    int sa = __builtin_ctzll(a);
    int sb = __builtin_ctzll(b);
    int s = sa < sb ? sa : sb;
    a >>= sa;
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << s;
}

} // namespace

int Int::sign() const
{
    if (is_big()) return big_sign_;
    return small_ > 0 ? 1 : (small_ < 0 ? -1 : 0);
}

long long Int::to_int64() const
{
    if (is_big()) throw std::overflow_error("Int::to_int64: value out of range");
    return small_;
}

Int::Mag Int::magnitude() const
{
    if (is_big()) return mag_;
    Mag m;
    unsigned long long v = small_ < 0 ? 0ull - (unsigned long long)small_
                                      : (unsigned long long)small_;
    while (v != 0) {
        m.push_back((std::uint32_t)(v & 0xffffffffu));
        v >>= 32;
    }
    return m;
}

Int Int::make(int sign, Mag mag)
{
    trim(mag);
    Int r;
    if (mag.empty()) return r;
    if (mag.size() <= 2) {
        unsigned long long v = mag[0];
        if (mag.size() == 2) v |= (unsigned long long)mag[1] << 32;
        if (v <= 0x7fffffffffffffffull) {
            r.small_ = sign > 0 ? (long long)v : -(long long)v;
            return r;
        }
    }
    r.big_sign_ = sign;
    r.mag_ = std::move(mag);
    return r;
}

int Int::cmp_mag(const Mag& a, const Mag& b)
{
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Int::Mag Int::add_mag(const Mag& a, const Mag& b)
{
    const Mag& x = a.size() >= b.size() ? a : b;
    const Mag& y = a.size() >= b.size() ? b : a;
    Mag r(x.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r[i] = (std::uint32_t)s;
        carry = s >> 32;
    }
    r[x.size()] = (std::uint32_t)carry;
    trim(r);
    return r;
}

Int::Mag Int::sub_mag(const Mag& a, const Mag& b)
{
    Mag r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = (std::int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += (std::int64_t)kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = (std::uint32_t)d;
    }
    trim(r);
    return r;
}

Int::Mag Int::mul_mag(const Mag& a, const Mag& b)
{
    if (a.empty() || b.empty()) return {};
    Mag r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = ai * b[j] + r[i + j] + carry;
            r[i + j] = (std::uint32_t)t;
            carry = t >> 32;
        }
        r[i + b.size()] = (std::uint32_t)carry;
    }
    trim(r);
    return r;
}

// Knuth algorithm D, base 2^32.
void Int::divmod_mag(const Mag& u, const Mag& v, Mag& q, Mag& r)
{
    if (v.empty()) throw std::domain_error("Int: division by zero");
    if (cmp_mag(u, v) < 0) {
        q.clear();
        r = u;
        return;
    }
    if (v.size() == 1) {
        q.assign(u.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | u[i];
            q[i] = (std::uint32_t)(cur / v[0]);
            rem = cur % v[0];
        }
        trim(q);
        r.clear();
        if (rem) r.push_back((std::uint32_t)rem);
        return;
    }

    const std::size_t n = v.size();
    const std::size_t m = u.size() - n;
    const int shift = __builtin_clz(v.back());

    Mag vn(n);
    for (std::size_t i = n; i-- > 1;)
        vn[i] = (std::uint32_t)((((std::uint64_t)v[i] << 32) | v[i - 1]) << shift >> 32);
    vn[0] = v[0] << shift;

    Mag un(u.size() + 1, 0);
    un[u.size()] = shift ? (std::uint32_t)((std::uint64_t)u.back() >> (32 - shift)) : 0;
    for (std::size_t i = u.size(); i-- > 1;)
        un[i] = (std::uint32_t)((((std::uint64_t)u[i] << 32) | u[i - 1]) << shift >> 32);
    un[0] = u[0] << shift;

    q.assign(m + 1, 0);
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = ((std::uint64_t)un[j + n] << 32) | un[j + n - 1];
        std::uint64_t qhat = num / vn[n - 1];
        std::uint64_t rhat = num % vn[n - 1];
        while (qhat >= kBase ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply and subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            std::int64_t t = (std::int64_t)un[i + j] - (std::int64_t)(p & 0xffffffffu) - borrow;
            if (t < 0) {
                t += (std::int64_t)kBase;
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = (std::uint32_t)t;
        }
        std::int64_t t = (std::int64_t)un[j + n] - (std::int64_t)carry - borrow;
        if (t < 0) {
            // qhat was one too large: add divisor back
            t += (std::int64_t)kBase;
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = (std::uint64_t)un[i + j] + vn[i] + c2;
                un[i + j] = (std::uint32_t)s;
                c2 = s >> 32;
            }
            t += (std::int64_t)c2;
        }
        un[j + n] = (std::uint32_t)t;
        q[j] = (std::uint32_t)qhat;
    }
    trim(q);

    r.assign(n, 0);
    for (std::size_t i = 0; i < n - 1; ++i)
        r[i] = (std::uint32_t)((((std::uint64_t)un[i + 1] << 32) | un[i]) >> shift);
    r[n - 1] = un[n - 1] >> shift;
    trim(r);
}

Int Int::operator-() const
{
    if (!is_big()) {
        if (small_ != INT64_MIN) {
            Int r;
            r.small_ = -small_;
            return r;
        }
        return make(1, magnitude());
    }
    Int r = *this;
    r.big_sign_ = -r.big_sign_;
    return r;
}

Int Int::abs() const { return sign() < 0 ? -*this : *this; }

Int operator+(const Int& a, const Int& b)
{
    if (!a.is_big() && !b.is_big()) {
        long long s;
        if (!__builtin_add_overflow(a.small_, b.small_, &s)) {
            Int r;
            r.small_ = s;
            return r;
        }
    }
    int sa = a.sign(), sb = b.sign();
    if (sa == 0) return b;
    if (sb == 0) return a;
    Int::Mag ma = a.magnitude(), mb = b.magnitude();
    if (sa == sb) return Int::make(sa, Int::add_mag(ma, mb));
    int c = Int::cmp_mag(ma, mb);
    if (c == 0) return Int();
    if (c > 0) return Int::make(sa, Int::sub_mag(ma, mb));
    return Int::make(sb, Int::sub_mag(mb, ma));
}

Int operator-(const Int& a, const Int& b) { return a + (-b); }

Int operator*(const Int& a, const Int& b)
{
    if (!a.is_big() && !b.is_big()) {
        long long p;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p)) {
            Int r;
            r.small_ = p;
            return r;
        }
    }
    int s = a.sign() * b.sign();
    if (s == 0) return Int();
    return Int::make(s, Int::mul_mag(a.magnitude(), b.magnitude()));
}

void Int::divmod(const Int& a, const Int& b, Int& q, Int& r)
{
    if (b.is_zero()) throw std::domain_error("Int: division by zero");
    if (!a.is_big() && !b.is_big() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
        q = Int(a.small_ / b.small_);
        r = Int(a.small_ % b.small_);
        return;
    }
    Mag mq, mr;
    divmod_mag(a.magnitude(), b.magnitude(), mq, mr);
    int qs = a.sign() * b.sign();
    q = make(qs, std::move(mq));
    r = make(a.sign(), std::move(mr));
}

Int operator/(const Int& a, const Int& b)
{
    Int q, r;
    Int::divmod(a, b, q, r);
    return q;
}

Int operator%(const Int& a, const Int& b)
{
    Int q, r;
    Int::divmod(a, b, q, r);
    return r;
}

bool operator==(const Int& a, const Int& b)
{
    if (a.is_big() != b.is_big()) return false;
    if (!a.is_big()) return a.small_ == b.small_;
    return a.big_sign_ == b.big_sign_ && a.mag_ == b.mag_;
}

int Int::cmp(const Int& a, const Int& b)
{
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (!a.is_big() && !b.is_big())
        return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
    int c = cmp_mag(a.magnitude(), b.magnitude());
    return sa >= 0 ? c : -c;
}

Int Int::gcd(const Int& a, const Int& b)
{
    if (!a.is_big() && !b.is_big()) {
        std::uint64_t x = a.small_ < 0 ? 0ull - (unsigned long long)a.small_
                                       : (unsigned long long)a.small_;
        std::uint64_t y = b.small_ < 0 ? 0ull - (unsigned long long)b.small_
                                       : (unsigned long long)b.small_;
        std::uint64_t g = gcd_u64(x, y);
        if (g <= 0x7fffffffffffffffull) return Int((long long)g);
        Mag m{(std::uint32_t)(g & 0xffffffffu), (std::uint32_t)(g >> 32)};
        return make(1, std::move(m));
    }
    Int x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        Int q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

Int Int::pow(const Int& base, unsigned long long e)
{
    Int r(1), b = base;
    while (e) {
        if (e & 1) r *= b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Int Int::from_string(std::string_view s)
{
    if (s.empty()) throw std::invalid_argument("Int: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("Int: no digits");
    Int r;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Int: bad digit");
        r = r * Int(10) + Int(s[i] - '0');
    }
    return neg ? -r : r;
}

std::string Int::to_string() const
{
    if (!is_big()) return std::to_string(small_);
    std::string out;
    Int v = abs();
    const Int chunk(1000000000);
    std::vector<long long> parts;
    while (!v.is_zero()) {
        Int q, r;
        divmod(v, chunk, q, r);
        parts.push_back(r.to_int64());
        v = q;
    }
    out = std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        out += std::string(9 - p.size(), '0') + p;
    }
    if (sign() < 0) out.insert(out.begin(), '-');
    return out;
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d))
{
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    normalize();
}

void Rat::normalize()
{
    if (num_.is_zero()) {
        den_ = Int(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = Int::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rat Rat::operator-() const
{
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat Rat::inverse() const
{
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b)
{
    if (b.is_zero()) return a;
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b)
{
    if (a.is_zero() || b.is_zero()) return Rat();
    // cross-reduce to keep operands small
    Int g1 = Int::gcd(a.num_, b.den_);
    Int g2 = Int::gcd(b.num_, a.den_);
    Rat r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

bool operator<(const Rat& a, const Rat& b)
{
    return Int::cmp(a.num() * b.den(), b.num() * a.den()) < 0;
}

Rat Rat::from_string(std::string_view s)
{
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(Int::from_string(s));
    return Rat(Int::from_string(s.substr(0, slash)),
               Int::from_string(s.substr(slash + 1)));
}

std::string Rat::to_string() const
{
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.to_string(); }

} // namespace lcslab
