#include "apd/bigint.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace apd {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long mag = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                   : static_cast<unsigned long long>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(big.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out.push_back(static_cast<std::uint32_t>(s & 0xffffffffULL));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(d));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
    } else {
        int c = BigInt::cmp_mag(a, b);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = a.sign_;
            r.limbs_ = BigInt::sub_mag(a.limbs_, b.limbs_);
        } else {
            r.sign_ = b.sign_;
            r.limbs_ = BigInt::sub_mag(b.limbs_, a.limbs_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

void BigInt::shl_bit() {
    std::uint32_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::set_bit0(bool on) {
    if (limbs_.empty()) {
        if (on) limbs_.push_back(1);
    } else if (on) {
        limbs_[0] |= 1u;
    }
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a, b);
    if (c < 0) {
        q = BigInt();
        r = a;
        return;
    }
    // single-limb divisor fast path
    if (b.limbs_.size() == 1) {
        std::uint64_t d = b.limbs_[0];
        std::vector<std::uint32_t> qm(a.limbs_.size());
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            qm[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q = BigInt();
        q.limbs_ = std::move(qm);
        q.sign_ = 1;
        q.trim();
        r = BigInt(static_cast<long long>(rem));
    } else {
        // bit-by-bit long division on magnitudes
        BigInt rem, quot;
        quot.limbs_.assign(a.limbs_.size(), 0);
        quot.sign_ = 1;
        const std::size_t nbits = a.limbs_.size() * 32;
        BigInt bmag = b.abs();
        for (std::size_t bit = nbits; bit-- > 0;) {
            rem.shl_bit();
            if (rem.sign_ == 0 && !rem.limbs_.empty()) rem.sign_ = 1;
            bool abit = (a.limbs_[bit / 32] >> (bit % 32)) & 1u;
            rem.set_bit0(abit);
            if (!rem.limbs_.empty()) rem.sign_ = 1;
            if (cmp_mag(rem, bmag) >= 0) {
                rem.limbs_ = sub_mag(rem.limbs_, bmag.limbs_);
                rem.trim();
                quot.limbs_[bit / 32] |= (1u << (bit % 32));
            }
        }
        quot.trim();
        rem.trim();
        q = std::move(quot);
        r = std::move(rem);
    }
    if (q.sign_ != 0) q.sign_ = a.sign_ * b.sign_;
    if (r.sign_ != 0) r.sign_ = a.sign_;
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

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_mag(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (sign_ >= 0) return mag <= 0x7fffffffffffffffULL;
    return mag <= 0x8000000000000000ULL;
}

long long BigInt::to_int64() const {
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
    if (sign_ < 0) return static_cast<long long>(0ULL - mag);
    return static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    BigInt cur = abs();
    const BigInt chunk(1000000000LL);
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, chunk, q, r);
        long long part = r.is_zero() ? 0 : r.to_int64();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + part % 10));
            part /= 10;
        }
        cur = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    const BigInt ten(10);
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw std::invalid_argument("BigInt: bad digit in input");
        out = out * ten + BigInt(s[pos] - '0');
    }
    if (neg) out = -out;
    return out;
}

}  // namespace apd
