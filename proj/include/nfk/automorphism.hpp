#pragma once

#include <optional>
#include <vector>

#include "nfk/dickson.hpp"

namespace nfk {

// The pair (i, k) encoding the automorphism a -> a^i, b -> a^k b.
// Membership in S(q,n) means gcd(i, m) = 1 and k*t*n + t = i*t (mod m),
// the latter being k*(q^n-1)/(q-1) + t = i*t since (q^n-1)/(q-1) = t*n.
struct AutPair {
    Int i;
    Int k;

    bool operator==(const AutPair&) const = default;
    bool operator<(const AutPair& o) const { return i != o.i ? i < o.i : k < o.k; }
};

/// True iff (i, k) encodes an automorphism. Rejects the (3,2) pair, where
/// the characterization does not apply.
bool is_automorphism_pair(const Int& i, const Int& k, const DicksonParams& P);

/// All of S(q,n), sorted by (i, k). Throws when the expected size exceeds
/// max_size.
std::vector<AutPair> enumerate_S(const DicksonParams& P, const Int& max_size);

/// All of T(q,n): (i mod m, k mod q-1) with gcd(i,m) = 1 and
/// kn = i-1 (mod q-1). Sorted.
std::vector<std::pair<Int, Int>> enumerate_T(const DicksonParams& P);

/// {k mod q-1 : kn = i-1 (mod q-1)} for a unit i: empty or exactly
/// gcd(n, q-1) residues forming a coset of <(q-1)/g>.
std::vector<Int> solve_k_fiber(const Int& i, const DicksonParams& P);

/// Image of a^alpha b^beta under (i, k).
GroupElement apply(const AutPair& phi, const GroupElement& x, const DicksonParams& P);

/// phi o psi = (i*j, k + i*l): the semidirect product of the units of Z_m
/// acting on Z_m by multiplication.
AutPair compose(const AutPair& phi, const AutPair& psi, const DicksonParams& P);
inline AutPair aut_identity() { return {Int(1), Int(0)}; }
AutPair aut_inverse(const AutPair& phi, const DicksonParams& P);

/// Inner automorphism count t*n.
Int inner_count(const DicksonParams& P);

/// The unit-density reciprocal rho = phi(q2) * gcd(n, q-1) / q2, exact.
Rat rho(const DicksonParams& P);

/// |Aut| = (1/rho) * phi(m) * t * gcd(n, q-1); integrality asserted.
Int aut_count_corrho(const DicksonParams& P);

// The short product formula t * phi(t) * phi(q1) * q2. Only trusted when
// gcd(n, t) = 1: in the gcd = 2 case enumeration gives exactly twice this
// value, so the result carries a validity flag instead of pretending.
struct FlaggedCount {
    Int value;
    bool trusted = true;
};
FlaggedCount aut_count_closed(const DicksonParams& P);

/// n = 2 specialization: phi((q^2-1)/2) * (q+1).
Int aut_count_n2(const DicksonParams& P);

// ---- generic brute-force oracle over explicit tables ----
//
// Candidate generator images are filtered by element order only, then
// extended over the whole table by closure. Nothing below knows about the
// congruence characterization; that is the point.

/// Every automorphism, encoded as the image tuple of g.generators.
/// Lexicographically sorted; compact enough for thousands of results.
std::vector<std::vector<int>> brute_force_generator_images(const FiniteGroupTable& g);

/// Same search materialized as full permutations (index -> image).
/// Guarded by max_order since the output is order * count integers.
std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroupTable& g,
                                                        const Int& max_order);

/// Extends generator images to a map on all of G, or nullopt if the
/// images are inconsistent or the extension is not bijective.
std::optional<std::vector<int>> extend_generator_images(const FiniteGroupTable& g,
                                                        const std::vector<int>& images);

}  // namespace nfk
