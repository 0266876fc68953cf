#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nfk/ints.hpp"

namespace nfk {

struct PrimePower {
    Int prime;
    unsigned exponent = 0;
};

struct Factorization {
    Int value;
    std::vector<PrimePower> factors;  // primes strictly increasing

    Int reassemble() const;
};

/// Deterministic Miller-Rabin with a fixed witness set (exact for all
/// inputs below 3.3e24, far beyond the library's factorization bound).
bool is_prime(const Int& n);

/// Trial division. Inputs above `limit` are rejected with bound_exceeded
/// instead of grinding; the default limit is 2^64.
Factorization factorize(const Int& n);
Factorization factorize(const Int& n, const Int& limit);

Int totient(const Int& n);
Int totient(const Factorization& f);

/// Least e >= 1 with a^e = 1 (mod n), n >= 2. Rejects gcd(a, n) != 1.
Int multiplicative_order(const Int& a, const Int& n);

/// Splits x = q1 * q2 where q2 collects the full prime power of every
/// prime dividing n and q1 keeps the rest, so gcd(q1, q2) = 1 and no
/// prime of n divides q1.
std::pair<Int, Int> split_by_primes(const Int& x, const Int& n);

Int binomial(const Int& n, unsigned long k);

/// Number of size-r multisets over k symbols: binomial(k + r - 1, r).
Int multichoose(const Int& k, unsigned long r);

/// q = p^l with p prime, or nullopt.
std::optional<PrimePower> try_prime_power(const Int& q);

/// Same as try_prime_power but throws invalid_input("not a prime power").
PrimePower is_prime_power(const Int& q);

}  // namespace nfk
