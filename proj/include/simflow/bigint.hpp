#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace simflow {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline BigInt big_pow(std::uint64_t base, unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b)
{
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b)
{
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline BigInt factorial(unsigned long n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt from_u64(std::uint64_t v)
{
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

inline BigInt from_i64(std::int64_t v)
{
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    // avoids overflow on INT64_MIN
    BigInt out = from_u64(static_cast<std::uint64_t>(-(v + 1)));
    out += 1;
    return -out;
}

/// Non-negative remainder of `a` modulo `m` (m > 0).
inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m)
{
    BigInt r;
    BigInt mm = from_u64(m);
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, r.get_mpz_t());
    return out;
}

inline bool fits_i64(const BigInt& a)
{
    return mpz_sizeinbase(a.get_mpz_t(), 2) <= 62;
}

inline std::int64_t to_i64(const BigInt& a)
{
    return static_cast<std::int64_t>(a.get_si());
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }

} // namespace simflow
