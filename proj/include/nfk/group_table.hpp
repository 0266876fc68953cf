#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nfk/ints.hpp"

namespace nfk {

// An explicit finite group: a multiplication table over element indices
// 0..order-1 plus a generating sequence. This is the substrate every
// brute-force oracle runs on; nothing in here knows about presentations,
// congruences or nearfields.
struct FiniteGroupTable {
    int order = 0;
    int identity = 0;
    std::vector<int32_t> mul;  // row-major, order * order
    std::vector<int> generators;
    std::vector<std::string> element_names;  // optional, may be empty

    int at(int x, int y) const { return mul[static_cast<size_t>(x) * order + y]; }
    void set(int x, int y, int v) { mul[static_cast<size_t>(x) * order + y] = static_cast<int32_t>(v); }
    std::string name_of(int x) const;
};

struct GroupAxiomReport {
    bool closed = false;
    bool associative = false;
    bool has_identity = false;
    bool has_inverses = false;
    bool generators_generate = false;

    bool ok() const {
        return closed && associative && has_identity && has_inverses && generators_generate;
    }
};

/// Full check; associativity is the cubic part, so keep tables modest.
GroupAxiomReport verify_group_axioms(const FiniteGroupTable& g);

/// Like verify_group_axioms but with associativity tested on a
/// deterministic sample of triples; for tables too large for the cubic scan.
GroupAxiomReport verify_group_axioms_sampled(const FiniteGroupTable& g, int sample_stride);

int element_order(const FiniteGroupTable& g, int x);
std::vector<int> element_orders(const FiniteGroupTable& g);

/// x^e for e >= 0 by square-and-multiply on the table.
int table_power(const FiniteGroupTable& g, int x, const Int& e);
int table_inverse(const FiniteGroupTable& g, int x);

/// Sorted list of elements commuting with everything.
std::vector<int> center_elements(const FiniteGroupTable& g);

/// Sorted element list of <gens>.
std::vector<int> generated_subgroup(const FiniteGroupTable& g, const std::vector<int>& gens);

/// Greedy minimal generating sequence: scan elements in index order and
/// keep those that enlarge the generated subgroup. Deterministic.
std::vector<int> greedy_generators(const FiniteGroupTable& g);

FiniteGroupTable cyclic_group(int n);
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// One Sylow p-subgroup, grown by the normalizer climb, sorted.
std::vector<int> sylow_subgroup(const FiniteGroupTable& g, int p);

bool is_cyclic_subgroup(const FiniteGroupTable& g, const std::vector<int>& elems);

/// Order >= 8 two-group with presentation witnesses
/// x^(2^(k-1)) = 1, y^2 = x^(2^(k-2)), y x y^-1 = x^-1.
bool is_generalized_quaternion(const FiniteGroupTable& g, const std::vector<int>& elems);

}  // namespace nfk
