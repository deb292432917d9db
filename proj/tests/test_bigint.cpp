#include <doctest.h>

#include "brieskorn/bigint.hpp"
#include "brieskorn/rational.hpp"

#include <random>

using brieskorn::BigInt;
using brieskorn::Rational;

TEST_CASE("bigint small arithmetic") {
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-17).to_string() == "-17");
    CHECK((BigInt(12) + BigInt(-5)).to_string() == "7");
    CHECK((BigInt(-12) * BigInt(3)).to_string() == "-36");
    CHECK((BigInt(7) / BigInt(2)).to_string() == "3");
    CHECK((BigInt(-7) / BigInt(2)).to_string() == "-3");
    CHECK((BigInt(-7) % BigInt(2)).to_string() == "-1");
    CHECK(BigInt(-7).mod_floor(BigInt(2)).to_string() == "1");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)).to_string() == "6");
}

TEST_CASE("bigint string round trip") {
    const char* cases[] = {
        "0", "-1", "4294967295", "4294967296", "18446744073709551616",
        "-340282366920938463463374607431768211456",
        "123456789012345678901234567890123456789012345678901234567890",
    };
    for (const char* s : cases)
        CHECK(BigInt::from_string(s).to_string() == s);
}

TEST_CASE("bigint matches __int128 on random 64-bit operands") {
    std::mt19937_64 rng(12345);
    auto as_string = [](__int128 v) {
        if (v == 0) return std::string("0");
        bool neg = v < 0;
        unsigned __int128 m = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        std::string s;
        while (m) { s.push_back(char('0' + int(m % 10))); m /= 10; }
        if (neg) s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    };
    for (int t = 0; t < 20000; ++t) {
        long long a = static_cast<long long>(rng());
        long long b = static_cast<long long>(rng());
        BigInt A(a), B(b);
        CHECK((A + B).to_string() == as_string((__int128)a + b));
        CHECK((A - B).to_string() == as_string((__int128)a - b));
        CHECK((A * B).to_string() == as_string((__int128)a * b));
        if (b != 0) {
            CHECK((A / B).to_string() == as_string((__int128)(a / b)));
            CHECK((A % B).to_string() == as_string((__int128)(a % b)));
        }
    }
}

TEST_CASE("bigint multi-limb divmod identities") {
    std::mt19937_64 rng(999);
    auto random_big = [&](int limbs) {
        BigInt v(0);
        for (int i = 0; i < limbs; ++i) v = v * BigInt(1ll << 32) + BigInt((long long)(rng() & 0xffffffffull));
        if (rng() & 1) v = -v;
        return v;
    };
    for (int t = 0; t < 4000; ++t) {
        BigInt a = random_big(1 + int(rng() % 6));
        BigInt b = random_big(1 + int(rng() % 4));
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        // exact product division
        CHECK((a * b) / b == a);
    }
}

TEST_CASE("bigint divmod hits the hard normalization cases") {
    // frozen quotients/remainders around the qhat correction and add-back
    // paths of the long division
    struct Case { const char *u, *v, *q, *r; };
    const Case cases[] = {
        {"64563604257983430656", "9223372036854775809", "6", "9223372036854775802"},
        {"170141183381241673680332773436927508480", "39614081257132168798919458818",
         "4294967294", "604453686435273437609988"},
        {"79225744662625108335194537984", "18446462598732840961", "4294901758",
         "18446181119461228546"},
        {"340282366920938463463374607431768211455", "79228162514264337589248983041",
         "4294967296", "18446744069414584319"},
    };
    for (const Case& c : cases) {
        BigInt u = BigInt::from_string(c.u), v = BigInt::from_string(c.v);
        BigInt q, r;
        BigInt::divmod(u, v, q, r);
        CHECK(q.to_string() == c.q);
        CHECK(r.to_string() == c.r);
        CHECK(q * v + r == u);
    }
}

TEST_CASE("bigint int64 narrowing") {
    CHECK(BigInt(9223372036854775807ll).fits_int64());
    CHECK(BigInt::from_string("-9223372036854775808").fits_int64());
    CHECK(!BigInt::from_string("9223372036854775808").fits_int64());
    CHECK(BigInt::from_string("-9223372036854775808").to_int64() ==
          std::numeric_limits<long long>::min());
}

TEST_CASE("rational normalization and arithmetic") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num().to_string() == "-3");
    CHECK(r.den().to_string() == "2");
    Rational s = Rational(BigInt(1), BigInt(3)) + Rational(BigInt(1), BigInt(6));
    CHECK(s == Rational(BigInt(1), BigInt(2)));
    CHECK((Rational(BigInt(5)) / Rational(BigInt(10))).to_string() == "1/2");
    CHECK_THROWS(Rational(BigInt(1), BigInt(0)));
}
