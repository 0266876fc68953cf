#include "nfk/dickson.hpp"

#include "nfk/errors.hpp"

namespace nfk {

DicksonParams validate_dickson_pair(const Int& q, unsigned n) {
    if (q < 2) throw invalid_input("dickson pair: q must be >= 2");
    if (n < 1) throw invalid_input("dickson pair: n must be >= 1");

    DicksonParams P;
    P.q = q;
    P.n = n;
    auto pp = try_prime_power(q);
    if (!pp) throw invalid_input("dickson pair (" + dec(q) + "," + std::to_string(n) +
                                 "): q not prime power");
    P.p = pp->prime;
    P.l = pp->exponent;

    const Int qm1 = q - 1;
    for (const auto& f : factorize(Int(n)).factors) {
        if (qm1 % f.prime != 0)
            throw invalid_input("dickson pair (" + dec(q) + "," + std::to_string(n) +
                                "): prime " + dec(f.prime) + " of n does not divide q-1");
    }
    if (n % 4 == 0 && qm1 % 4 != 0)
        throw invalid_input("dickson pair (" + dec(q) + "," + std::to_string(n) +
                            "): 4 | n but 4 does not divide q-1");

    const Int qn1 = pow_ui(q, n) - 1;
    if (qn1 % n != 0) throw internal_error("dickson pair: n does not divide q^n - 1");
    P.m = qn1 / n;
    if (P.m % qm1 != 0) throw internal_error("dickson pair: q-1 does not divide m");
    P.t = P.m / qm1;

    auto [q1, q2] = split_by_primes(qm1, Int(n));
    P.q1 = q1;
    P.q2 = q2;
    P.g = gcd(Int(n), qm1);
    P.gcd_nt = gcd(Int(n), P.t);

    if (P.gcd_nt != gcd(qm1, P.t))
        throw internal_error("dickson pair: gcd(n,t) != gcd(q-1,t)");
    if (P.gcd_nt > 2) throw internal_error("dickson pair: gcd(n,t) > 2");
    const bool split = (n % 2 == 1) || (mod_floor(q, Int(4)) != 3);
    if (split != (P.gcd_nt == 1))
        throw internal_error("dickson pair: gcd(n,t) dichotomy violated");

    P.p_order_mod_n =
        n == 1 ? 1u : static_cast<unsigned>(to_ulong(multiplicative_order(P.p, Int(n))));
    return P;
}

GroupElement elem_a(const DicksonParams& P) { return make_element(P, Int(1), Int(0)); }

GroupElement elem_b(const DicksonParams& P) {
    // with n = 1 the relation b^n = a^t collapses b onto a^t
    return P.n == 1 ? make_element(P, P.t, Int(0)) : GroupElement{Int(0), 1};
}

GroupElement make_element(const DicksonParams& P, const Int& a_exp, const Int& b_exp) {
    Int j = mod_floor(b_exp, Int(P.n));
    Int folds = (b_exp - j) / P.n;
    // each wrap of n b-steps contributes a^t
    Int i = mod_floor(a_exp + folds * P.t, P.m);
    return {i, static_cast<unsigned>(to_ulong(j))};
}

GroupElement elem_mul(const GroupElement& x, const GroupElement& y, const DicksonParams& P) {
    // (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2*q^j1) b^(j1+j2)
    Int a = x.a_exp + y.a_exp * powm(P.q, Int(x.b_exp), P.m);
    return make_element(P, a, Int(x.b_exp) + Int(y.b_exp));
}

Int elem_order(const GroupElement& x, const DicksonParams& P) {
    Int ord = P.group_order();
    for (const auto& f : factorize(ord).factors) {
        for (unsigned i = 0; i < f.exponent; ++i) {
            Int candidate = ord / f.prime;
            if (elem_power(x, candidate, P) == identity_element())
                ord = candidate;
            else
                break;
        }
    }
    return ord;
}

GroupElement elem_inverse(const GroupElement& x, const DicksonParams& P) {
    return elem_power(x, elem_order(x, P) - 1, P);
}

GroupElement elem_power(const GroupElement& x, const Int& e, const DicksonParams& P) {
    if (e < 0) return elem_power(elem_inverse(x, P), -e, P);
    GroupElement result = identity_element();
    GroupElement base = x;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = elem_mul(result, base, P);
        base = elem_mul(base, base, P);
        exp >>= 1;
    }
    return result;
}

std::pair<GroupElement, Int> center(const DicksonParams& P) {
    return {make_element(P, P.t, Int(0)), P.q - 1};
}

bool sylow2_cyclic(const DicksonParams& P) { return P.gcd_nt == 1; }

MetacyclicDescriptor metacyclic_decomposition(const DicksonParams& P) {
    if (P.gcd_nt != 1)
        throw invalid_input("metacyclic decomposition: not split case, gcd(n,t) = " +
                            dec(P.gcd_nt));
    MetacyclicDescriptor d;
    d.r_bar = P.q1;
    d.s_bar = P.q2;
    d.r = P.t * d.r_bar;
    d.s = Int(P.n) * d.s_bar;
    d.twist = powm(P.q, d.r_bar, d.r);
    d.witness_a = elem_power(elem_a(P), d.s_bar, P);
    d.witness_b = elem_power(elem_b(P), d.r_bar, P);

    if (d.r * d.s != P.group_order())
        throw internal_error("metacyclic decomposition: r*s != q^n - 1");
    if (powm(d.twist, d.s, d.r) != mod_floor(Int(1), d.r))
        throw internal_error("metacyclic decomposition: twist^s != 1 mod r");
    if (gcd(d.r_bar, Int(P.n)) != 1)
        throw internal_error("metacyclic decomposition: gcd(r_bar, n) != 1");
    return d;
}

int element_index(const DicksonParams& P, const GroupElement& x) {
    return static_cast<int>(to_ulong(x.a_exp)) * static_cast<int>(P.n) +
           static_cast<int>(x.b_exp);
}

GroupElement element_at(const DicksonParams& P, int index) {
    const int n = static_cast<int>(P.n);
    return {Int(index / n), static_cast<unsigned>(index % n)};
}

FiniteGroupTable build_group_table(const DicksonParams& P, const Int& max_order) {
    const Int order_big = P.group_order();
    if (order_big > max_order)
        throw bound_exceeded("group table for (" + dec(P.q) + "," + std::to_string(P.n) +
                             "): order " + dec(order_big) + " exceeds table bound " +
                             dec(max_order));
    const int order = static_cast<int>(to_ulong(order_big));
    const int n = static_cast<int>(P.n);
    const int m = static_cast<int>(to_ulong(P.m));
    const int t = static_cast<int>(to_ulong(P.t));

    FiniteGroupTable g;
    g.order = order;
    g.identity = 0;
    g.mul.resize(static_cast<size_t>(order) * order);

    // q^j mod m for j < n, as machine ints (m <= max_order)
    std::vector<int> qpow(n);
    for (int j = 0; j < n; ++j)
        qpow[j] = static_cast<int>(to_ulong(powm(P.q, Int(j), P.m)));

    // same product rule as elem_mul, with the mod arithmetic kept
    // incremental: stepping i2 by one adds q^j1 to the a-exponent
    for (int i1 = 0; i1 < m; ++i1) {
        for (int j1 = 0; j1 < n; ++j1) {
            const size_t row = static_cast<size_t>(i1 * n + j1) * order;
            const int step = qpow[j1];
            for (int j2 = 0; j2 < n; ++j2) {
                const int jj = j1 + j2;
                const int jres = jj >= n ? jj - n : jj;
                int acc = i1 + (jj >= n ? t : 0);
                acc %= m;
                for (int i2 = 0; i2 < m; ++i2) {
                    g.mul[row + static_cast<size_t>(i2) * n + j2] =
                        static_cast<int32_t>(acc * n + jres);
                    acc += step;
                    if (acc >= m) acc -= m;
                }
            }
        }
    }

    if (n == 1)
        g.generators = {element_index(P, elem_a(P))};
    else
        g.generators = {element_index(P, elem_a(P)), element_index(P, elem_b(P))};

    g.element_names.resize(order);
    for (int idx = 0; idx < order; ++idx) {
        const int i = idx / n, j = idx % n;
        std::string name;
        if (i == 0 && j == 0) name = "1";
        if (i == 1) name = "a";
        if (i > 1) name = "a^" + std::to_string(i);
        if (j >= 1) name += (name.empty() ? "" : " ") + std::string("b");
        if (j > 1) name += "^" + std::to_string(j);
        g.element_names[idx] = name;
    }
    return g;
}

}  // namespace nfk
