#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <iosfwd>

namespace brieskorn {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Magnitude is little-endian with no leading zero limbs; zero has sign 0
// and an empty magnitude.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    static BigInt from_string(const std::string& s);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }
    bool even() const { return !odd(); }

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);   // truncated toward zero
    BigInt& operator%=(const BigInt& o);   // remainder has dividend's sign

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    // quotient and remainder in one pass, truncated toward zero
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    // canonical representative in [0, m) for m > 0
    BigInt mod_floor(const BigInt& m) const;

    static BigInt gcd(BigInt a, BigInt b);

    int compare(const BigInt& o) const;
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    bool fits_int64() const;
    long long to_int64() const;   // throws if out of range

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;

    void trim();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace brieskorn
