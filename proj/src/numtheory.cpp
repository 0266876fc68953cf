#include "nfk/numtheory.hpp"

#include <array>

#include "nfk/errors.hpp"

namespace nfk {

namespace {

// Witnesses covering all n < 3.3e24 (Sorenson & Webster).
constexpr std::array<unsigned long, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                      19, 23, 29, 31, 37, 41};

const Int kDefaultFactorLimit = pow_ui(Int(2), 64);

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Int d = n - 1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    for (unsigned long w : kWitnesses) {
        if (miller_rabin_witness(n, Int(w), d, r)) return false;
    }
    return true;
}

Int Factorization::reassemble() const {
    Int r = 1;
    for (const auto& f : factors) r *= pow_ui(f.prime, f.exponent);
    return r;
}

Factorization factorize(const Int& n) { return factorize(n, kDefaultFactorLimit); }

Factorization factorize(const Int& n, const Int& limit) {
    if (n < 1) throw invalid_input("factorize: n must be >= 1, got " + dec(n));
    if (n > limit)
        throw bound_exceeded("factorize: " + dec(n) + " exceeds factorization limit " +
                             dec(limit));
    Factorization out;
    out.value = n;
    Int rest = n;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (e) out.factors.push_back({p, e});
    };
    strip(Int(2));
    strip(Int(3));
    // wheel over 6k +- 1
    for (Int d = 5; d * d <= rest; d += 4) {
        strip(d);
        d += 2;
        strip(d);
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    return out;
}

Int totient(const Factorization& f) {
    Int r = 1;
    for (const auto& pp : f.factors) r *= pow_ui(pp.prime, pp.exponent - 1) * (pp.prime - 1);
    return r;
}

Int totient(const Int& n) { return totient(factorize(n)); }

Int multiplicative_order(const Int& a, const Int& n) {
    if (n < 2) throw invalid_input("multiplicative_order: modulus must be >= 2");
    Int ar = mod_floor(a, n);
    if (gcd(ar, n) != 1)
        throw invalid_input("multiplicative_order: gcd(" + dec(a) + ", " + dec(n) + ") != 1");
    Int e = totient(n);
    for (const auto& pp : factorize(e).factors) {
        for (unsigned i = 0; i < pp.exponent; ++i) {
            Int candidate = e / pp.prime;
            if (powm(ar, candidate, n) == 1)
                e = candidate;
            else
                break;
        }
    }
    return e;
}

std::pair<Int, Int> split_by_primes(const Int& x, const Int& n) {
    if (x < 1) throw invalid_input("split_by_primes: x must be >= 1");
    if (n < 1) throw invalid_input("split_by_primes: n must be >= 1");
    Int q1 = x, q2 = 1;
    for (const auto& pp : factorize(n).factors) {
        while (q1 % pp.prime == 0) {
            q1 /= pp.prime;
            q2 *= pp.prime;
        }
    }
    return {q1, q2};
}

Int binomial(const Int& n, unsigned long k) {
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int multichoose(const Int& k, unsigned long r) {
    if (k < 1) throw invalid_input("multichoose: k must be >= 1");
    return binomial(k + r - 1, r);
}

std::optional<PrimePower> try_prime_power(const Int& q) {
    if (q < 2) return std::nullopt;
    // perfect power root: q = b^e with maximal e, then b must be prime
    for (unsigned long e = mpz_sizeinbase(q.get_mpz_t(), 2); e >= 1; --e) {
        Int root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) != 0) {
            if (is_prime(root)) return PrimePower{root, static_cast<unsigned>(e)};
            return std::nullopt;  // exact e-th power of a composite base
        }
    }
    return std::nullopt;
}

PrimePower is_prime_power(const Int& q) {
    auto pp = try_prime_power(q);
    if (!pp) throw invalid_input("not a prime power: " + dec(q));
    return *pp;
}

}  // namespace nfk
