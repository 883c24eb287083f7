#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qbethe {

// Signed arbitrary-precision integer, base 10^9 limbs.
// Only the operations needed for exact character coefficients are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && limbs_ == o.limbs_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }

    std::string to_string() const;

    // Exact conversion; throws std::overflow_error if out of range.
    long long to_int64() const;

    double to_double() const;

private:
    static constexpr uint32_t kBase = 1000000000u;

    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // little-endian, no leading zeros, empty == 0

    void trim();
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static BigInt add_abs(const BigInt& a, const BigInt& b, bool negative);
    static BigInt sub_abs(const BigInt& a, const BigInt& b, bool negative);  // |a| >= |b|
};

}  // namespace qbethe
