#include "symch/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace symch {

// ---------------------------------------------------------------- BigInt

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // avoid UB on LLONG_MIN
    unsigned long long m = negative_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
    while (m != 0) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
        m >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) { d += (1LL << 32); borrow = 1; } else borrow = 0;
        r.push_back(static_cast<uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Knuth algorithm D on base-2^32 limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) { r = a; return; }

    if (b.size() == 1) {
        uint64_t d = b[0], rem = 0;
        q.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }

    // Normalize so the divisor's top limb has its high bit set.
    int shift = 0;
    for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    auto shl = [shift](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        for (size_t i = 0; i < v.size(); ++i) {
            out[i] |= static_cast<uint32_t>((static_cast<uint64_t>(v[i]) << shift) & 0xffffffffULL);
            if (shift) out[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift));
        }
        return out;
    };
    std::vector<uint32_t> u = shl(a);            // size n+1 guaranteed headroom
    std::vector<uint32_t> v = shl(b);
    while (!v.empty() && v.back() == 0) v.pop_back();
    const size_t n = v.size();
    const size_t m = u.size() - n;               // quotient has <= m limbs
    q.assign(m, 0);

    const uint64_t base = 1ULL << 32;
    for (size_t j = m; j-- > 0;) {
        uint64_t top2 = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = top2 / v[n - 1];
        uint64_t rhat = top2 % v[n - 1];
        while (qhat >= base ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= base) break;
        }
        // u[j .. j+n] -= qhat * v
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffULL) - borrow;
            if (d < 0) { d += static_cast<int64_t>(base); borrow = 1; } else borrow = 0;
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
        if (d < 0) {
            // qhat was one too large: add back
            d += static_cast<int64_t>(base);
            --qhat;
            uint64_t c2 = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffULL);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= static_cast<int64_t>(base) - 1;
        }
        u[j + n] = static_cast<uint32_t>(d);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();

    // Denormalize remainder.
    r.assign(u.begin(), u.begin() + static_cast<long>(n));
    if (shift) {
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t lo = static_cast<uint64_t>(r[i]) >> shift;
            uint64_t hi = (i + 1 < r.size()) ? (static_cast<uint64_t>(r[i + 1]) << (32 - shift)) : 0;
            r[i] = static_cast<uint32_t>((lo | hi) & 0xffffffffULL);
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.negative_ == b.negative_) {
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.negative_ = a.negative_;
    } else {
        int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
            r.negative_ = a.negative_;
        } else {
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
            r.negative_ = b.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_ = BigInt::mul_mag(a.limbs_, b.limbs_);
    r.negative_ = !r.limbs_.empty() && (a.negative_ != b.negative_);
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem) {
    std::vector<uint32_t> q, r;
    divmod_mag(a.limbs_, b.limbs_, q, r);
    quot.limbs_ = std::move(q);
    quot.negative_ = !quot.limbs_.empty() && (a.negative_ != b.negative_);
    rem.limbs_ = std::move(r);
    rem.negative_ = !rem.limbs_.empty() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

std::strong_ordering BigInt::operator<=>(const BigInt& b) const {
    if (negative_ != b.negative_) return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, b.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_longlong() const {
    if (limbs_.size() > 2) return false;
    unsigned long long m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    if (negative_) return m <= 0x8000000000000000ULL;
    return m <= 0x7fffffffffffffffULL;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt: does not fit in long long");
    unsigned long long m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    if (negative_) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
}

BigInt BigInt::from_string(std::string_view s) {
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    BigInt r;
    const BigInt chunk_base(1000000000LL);
    while (i < s.size()) {
        size_t take = std::min<size_t>(9, s.size() - i);
        long long v = 0;
        for (size_t k = 0; k < take; ++k, ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            v = v * 10 + (s[i] - '0');
        }
        BigInt scale = 1;
        for (size_t k = 0; k < take; ++k) scale *= BigInt(10);
        r = r * scale + BigInt(v);
    }
    if (neg && !r.is_zero()) r.negative_ = true;
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

std::string BigInt::str() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        // divide magnitude by 10^9, collect remainder
        uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        std::string chunk = std::to_string(rem);
        if (!mag.empty()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    if (negative_) out.insert(0, 1, '-');
    return out;
}

// -------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_string(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& b) const {
    return (num_ * b.den_) <=> (b.num_ * den_);
}

std::string Rational::str() const {
    if (is_integer()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational rational_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

} // namespace symch
