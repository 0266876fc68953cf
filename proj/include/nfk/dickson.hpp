#pragma once

#include <utility>

#include "nfk/group_table.hpp"
#include "nfk/ints.hpp"
#include "nfk/numtheory.hpp"

namespace nfk {

// A validated Dickson pair (q, n) together with every derived scalar the
// rest of the library leans on. n = 1 is accepted as the degenerate field
// case so catalog code can treat GF(q) uniformly.
struct DicksonParams {
    Int q;               // prime power p^l
    unsigned n = 1;
    Int p;               // base prime
    unsigned l = 1;      // q = p^l
    Int m;               // (q^n - 1) / n
    Int t;               // m / (q - 1)
    Int q1;              // q - 1 = q1 * q2, coprime
    Int q2;              // the full prime power of every prime of n
    Int g;               // gcd(n, q - 1)
    Int gcd_nt;          // gcd(n, t) = gcd(q - 1, t), always 1 or 2
    unsigned p_order_mod_n = 1;  // multiplicative order of p mod n (1 when n = 1)

    Int group_order() const { return m * n; }  // q^n - 1
    bool is_field_case() const { return n == 1; }
    // (3,2) is the one pair the automorphism characterization excludes.
    bool is_quaternion_exception() const { return q == 3 && n == 2; }
};

/// Checks the pair conditions (q a prime power, every prime of n divides
/// q-1, 4|n only if 4|q-1) and fills in all derived scalars.
DicksonParams validate_dickson_pair(const Int& q, unsigned n);

// Normal form a^i b^j with 0 <= i < m and 0 <= j < n. Equality is
// field-wise; all arithmetic lands back in normal form.
struct GroupElement {
    Int a_exp;
    unsigned b_exp = 0;

    bool operator==(const GroupElement&) const = default;
};

inline GroupElement identity_element() { return {Int(0), 0}; }
GroupElement elem_a(const DicksonParams& P);
GroupElement elem_b(const DicksonParams& P);

/// Reduce arbitrary exponents into normal form. Overflowing b-exponents
/// fold through b^n = a^t.
GroupElement make_element(const DicksonParams& P, const Int& a_exp, const Int& b_exp);

GroupElement elem_mul(const GroupElement& x, const GroupElement& y, const DicksonParams& P);
GroupElement elem_inverse(const GroupElement& x, const DicksonParams& P);
GroupElement elem_power(const GroupElement& x, const Int& e, const DicksonParams& P);
Int elem_order(const GroupElement& x, const DicksonParams& P);

/// (a^t, q - 1): generator and order of the center.
std::pair<GroupElement, Int> center(const DicksonParams& P);

/// gcd(q-1, t) = 1, equivalently n odd or q != 3 (mod 4).
bool sylow2_cyclic(const DicksonParams& P);

// The split-metacyclic shape D(r, s; twist) of the group when
// gcd(n, t) = 1, with explicit generator witnesses.
struct MetacyclicDescriptor {
    Int r;      // t * r_bar
    Int s;      // n * s_bar
    Int twist;  // q^r_bar mod r
    Int r_bar;  // = q1
    Int s_bar;  // = q2
    GroupElement witness_a;  // a^s_bar, of order r
    GroupElement witness_b;  // b^r_bar, of order s when projected suitably
};

MetacyclicDescriptor metacyclic_decomposition(const DicksonParams& P);

/// Explicit table over all m*n normal forms; index of a^i b^j is i*n + j.
/// Generators are a (index n) and b (index 1); for n = 1 just a.
FiniteGroupTable build_group_table(const DicksonParams& P, const Int& max_order);

int element_index(const DicksonParams& P, const GroupElement& x);
GroupElement element_at(const DicksonParams& P, int index);

}  // namespace nfk
