#pragma once

#include <array>
#include <string>

#include "nfk/descriptor.hpp"
#include "nfk/group_table.hpp"

namespace nfk {

// One row of the exceptional-nearfield data: the multiplicative group,
// the two automorphism group orders, and their index.
struct ExceptionalRecord {
    ExceptionalLabel label;
    int order;                    // p^2
    std::string mult_group_name;
    int mult_group_order;         // order - 1
    std::string group_aut_name;   // automorphism group of the mult group
    int nf_aut_order;
    int group_aut_order;
    int factor;                   // group_aut_order / nf_aut_order
};

const std::array<ExceptionalRecord, 7>& exceptional_table();
const ExceptionalRecord& exceptional_record(ExceptionalLabel label);

/// SL(2,p): determinant-1 2x2 matrices over Z_p, indexed lexicographically
/// by (a,b,c,d) rows.
FiniteGroupTable special_linear_2(int p, const Int& max_order);

/// The 48 unit quaternions with coordinates (x + y*sqrt2)/2, built by
/// exact integer arithmetic.
FiniteGroupTable binary_octahedral_group();

/// The multiplicative group of an exceptional nearfield as an explicit
/// table (direct products with the cyclic factor where needed).
FiniteGroupTable exceptional_group(ExceptionalLabel label, const Int& max_order);

struct FieldCounts {
    Int mult_aut;  // phi(p^l - 1)
    Int nf_aut;    // l, the Frobenius powers
    Rat factor;    // their exact quotient; integrality asserted downstream
};

FieldCounts field_counts(const Int& p, unsigned l);

/// |Aut(N, *)| across the trichotomy. The dickson (3,2) pair goes through
/// the brute-force path since the congruence formulas exclude it.
Int mult_aut_count(const NearfieldDescriptor& N);

/// |Aut(N, +, *)|: l for fields, 6 for dickson (3,2), l*n/ord_n(p) for
/// other dickson pairs, the table value for exceptional nearfields.
Int nearfield_aut_order(const NearfieldDescriptor& N);

/// F(N): index of the nearfield automorphisms inside the multiplicative
/// automorphisms. Divisibility asserted; both counts reported on failure.
Int factor_index(const NearfieldDescriptor& N);

/// The exceptional-nearfield data as stable text artifacts.
std::string catalog_csv();
std::string catalog_json();

}  // namespace nfk
