#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nfk/dickson.hpp"
#include "nfk/group_table.hpp"

namespace nfk {

// GF(p^l) as explicit tables. An element index encodes the coefficient
// vector of its residue polynomial in base-p little-endian digits, so
// index = c0 + c1*p + ... + c(l-1)*p^(l-1).
struct FieldTable {
    int p = 0;
    unsigned l = 1;
    int order = 0;              // p^l
    std::vector<int> modulus;   // monic irreducible, low-to-high, size l+1
    std::vector<int32_t> add;   // row-major order*order
    std::vector<int32_t> mul;

    int add_at(int x, int y) const { return add[static_cast<size_t>(x) * order + y]; }
    int mul_at(int x, int y) const { return mul[static_cast<size_t>(x) * order + y]; }
    int neg(int x) const;
    /// x^e with e reduced mod (order-1) for nonzero x; 0^e = 0 (e > 0).
    int pow(int x, const Int& e) const;
};

/// Deterministic: the modulus is the lexicographically smallest monic
/// irreducible of degree l over Z_p (constant coefficient varying fastest).
FieldTable gf_build(int p, unsigned l, const Int& max_order);

// A finite nearfield as explicit tables: addition inherited from GF(q^n),
// multiplication coupled through Frobenius twists. For n = 1 this is the
// field itself.
struct NearfieldTable {
    DicksonParams params;
    FieldTable base;                 // GF(q^n)
    int order = 0;                   // q^n
    int generator = 0;               // canonical full-order element of the base field
    std::vector<int> coupling_class; // per element: j in 0..n-1 (0 for the zero element)
    std::vector<int32_t> mul;        // coupled product

    int add_at(int x, int y) const { return base.add_at(x, y); }
    int mul_at(int x, int y) const { return mul[static_cast<size_t>(x) * order + y]; }
};

/// Builds DF(q,n): fixes the canonical generator gamma of GF(q^n)*,
/// assigns each nonzero y = gamma^e the class j with
/// e = (q^j - 1)/(q - 1) (mod n), and sets x*y = x^(q^j(y)) . y.
/// The twist sits on the left factor; that is what makes the right
/// distributive law come out of the Frobenius.
NearfieldTable dickson_nearfield(const DicksonParams& P, const Int& max_order);

struct NearfieldAxiomReport {
    bool additive_abelian_group = false;
    bool elementary_abelian = false;      // exponent p
    bool multiplicative_group = false;    // on the nonzero elements
    bool right_distributive = false;
    bool zero_annihilates = false;
    bool left_distributive = false;
    std::optional<std::array<int, 3>> left_failure;   // witness triple (a, b, c)
    std::optional<std::array<int, 3>> right_failure;

    /// The nearfield axioms; left distributivity is reported, not required.
    bool nearfield_ok() const {
        return additive_abelian_group && elementary_abelian && multiplicative_group &&
               right_distributive && zero_annihilates;
    }
};

NearfieldAxiomReport verify_nearfield_axioms(const NearfieldTable& T);

/// (N \ {0}, *) as a plain group table; nonzero field index x maps to
/// group index x - 1, so the field's 1 is the group identity 0.
FiniteGroupTable multiplicative_group(const NearfieldTable& T);

/// Finds elements (A, B) of (N \ {0}, *) with A of order m, B^n = A^t,
/// B*A = A^q*B and <A, B> the whole group, returned as field indices.
/// This is the witness that the multiplicative group matches the
/// presentation table of the pair.
std::pair<int, int> match_presentation(const NearfieldTable& T);

/// All bijections preserving + and *, found by seeding candidate images
/// of the multiplicative generators, extending by multiplicative closure
/// and filtering by additivity. Sorted, as full permutations.
std::vector<std::vector<int>> nearfield_automorphisms(const NearfieldTable& T,
                                                      const Int& max_order);

/// CSV export: header "# nearfield q n", rows "i j add(i,j) mul(i,j)".
void write_nearfield_csv(const NearfieldTable& T, std::ostream& out);

}  // namespace nfk
