#pragma once

#include <gmpxx.h>

#include <string>

namespace nfk {

// Exact arithmetic everywhere. Counts like (q^n - 1)/n and the totient
// products built from them outgrow machine words long before the
// combinatorics get interesting, so the whole library works over mpz.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// base^exp for a plain machine exponent.
inline Int pow_ui(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// base^exp mod m, exp >= 0.
inline Int powm(const Int& base, const Int& exp, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Canonical residue in [0, m).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Inverse of a mod m; caller guarantees gcd(a, m) = 1.
inline Int invert_mod(const Int& a, const Int& m) {
    Int r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_ulong(const Int& v) { return v.fits_ulong_p(); }

inline unsigned long to_ulong(const Int& v) { return v.get_ui(); }

inline std::string dec(const Int& v) { return v.get_str(); }

/// Exact rational as "p/q" (or just "p" when integral).
inline std::string dec(const Rat& v) {
    return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

}  // namespace nfk
