#pragma once

#include <vector>

#include "nfk/catalog.hpp"

namespace nfk {

// Isomorphism classes of dim-dimensional near vector spaces over N
// correspond to size-dim multisets of cosets of Aut(N,+,*) in Aut(N,*)
// containing the trivial coset, i.e. nondecreasing sequences over
// {1..k} of length dim starting at 1, where k = factor_index(N).

/// k, the number of cosets.
Int coset_count(const NearfieldDescriptor& N);

/// multichoose(k, dim - 1) = binomial(dim + k - 2, dim - 1).
Int count_nvs(const NearfieldDescriptor& N, unsigned dim);

/// All class representatives in lexicographic order. Throws when the
/// count exceeds max_count (and when k itself is absurdly large).
std::vector<std::vector<unsigned long>> enumerate_classes(const NearfieldDescriptor& N,
                                                          unsigned dim,
                                                          const Int& max_count);

/// Independent counting oracle: walks all k^dim raw sequences over
/// {1..k}, keeps those containing 1, and identifies permutation-
/// equivalent ones. Guarded by a work bound (dim <= 8, k^dim <= 8^8).
Int multiset_oracle(unsigned k, unsigned dim);

/// Deep oracle over prime fields GF(p), p in {2,3,5}, dim in {1,2}:
/// scalar actions are dim-tuples of coprime power maps with at least one
/// identity coordinate; orbits are counted under compatibility with the
/// full additive automorphism group GL(dim, p) by exhaustive search.
Int nvs_isomorphism_oracle(int p, unsigned dim);

}  // namespace nfk
