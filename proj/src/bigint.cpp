#include "qbethe/bigint.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qbethe {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long u = negative_ ? -static_cast<unsigned long long>(v) : v;
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u % kBase));
        u /= kBase;
    }
}

BigInt::BigInt(const std::string& decimal) {
    size_t pos = 0;
    if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
        negative_ = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty decimal string");
    for (size_t i = pos; i < decimal.size(); ++i)
        if (decimal[i] < '0' || decimal[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + decimal + "'");
    // parse in chunks of 9 digits from the most significant end
    size_t n = decimal.size() - pos;
    size_t first = n % 9;
    if (first) {
        limbs_.assign(1, static_cast<uint32_t>(std::stoul(decimal.substr(pos, first))));
        pos += first;
    }
    while (pos < decimal.size()) {
        uint32_t chunk = static_cast<uint32_t>(std::stoul(decimal.substr(pos, 9)));
        // this * 1e9 + chunk
        uint64_t carry = chunk;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * kBase + carry;
            l = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        while (carry) {
            limbs_.push_back(static_cast<uint32_t>(carry % kBase));
            carry /= kBase;
        }
        pos += 9;
    }
    trim();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_abs(const BigInt& a, const BigInt& b, bool negative) {
    BigInt r;
    r.negative_ = negative;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t cur = carry;
        if (i < a.limbs_.size()) cur += a.limbs_[i];
        if (i < b.limbs_.size()) cur += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    r.trim();
    return r;
}

BigInt BigInt::sub_abs(const BigInt& a, const BigInt& b, bool negative) {
    BigInt r;
    r.negative_ = negative;
    r.limbs_ = a.limbs_;
    int64_t borrow = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        int64_t cur = static_cast<int64_t>(r.limbs_[i]) - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
        if (cur < 0) {
            cur += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(cur);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (negative_ == o.negative_) return add_abs(*this, o, negative_);
    int c = cmp_abs(*this, o);
    if (c == 0) return BigInt();
    if (c > 0) return sub_abs(*this, o, negative_);
    return sub_abs(o, *this, o.negative_);
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.negative_ = negative_ != o.negative_;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size() || carry; ++j) {
            uint64_t cur = r.limbs_[i + j] + carry;
            if (j < o.limbs_.size())
                cur += static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_abs(*this, o);
    return negative_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string s = negative_ ? "-" : "";
    s += std::to_string(limbs_.back());
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

long long BigInt::to_int64() const {
    long long r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (r > (std::numeric_limits<long long>::max() - limbs_[i]) / kBase)
            throw std::overflow_error("BigInt::to_int64: value out of range");
        r = r * kBase + limbs_[i];
    }
    return negative_ ? -r : r;
}

double BigInt::to_double() const {
    double r = 0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
    return negative_ ? -r : r;
}

}  // namespace qbethe
