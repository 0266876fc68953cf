#include "nfk/nvs.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nfk/errors.hpp"

namespace nfk {

Int coset_count(const NearfieldDescriptor& N) { return factor_index(N); }

Int count_nvs(const NearfieldDescriptor& N, unsigned dim) {
    if (dim < 1) throw invalid_input("count_nvs: dim must be >= 1");
    return multichoose(coset_count(N), dim - 1);
}

std::vector<std::vector<unsigned long>> enumerate_classes(const NearfieldDescriptor& N,
                                                          unsigned dim,
                                                          const Int& max_count) {
    if (dim < 1) throw invalid_input("enumerate_classes: dim must be >= 1");
    const Int count = count_nvs(N, dim);
    if (count > max_count)
        throw bound_exceeded("enumerate_classes: count " + dec(count) + " exceeds bound " +
                             dec(max_count));
    const Int k_big = coset_count(N);
    if (!fits_ulong(k_big))
        throw bound_exceeded("enumerate_classes: coset count " + dec(k_big) +
                             " too large to enumerate");
    const unsigned long k = to_ulong(k_big);

    std::vector<std::vector<unsigned long>> out;
    std::vector<unsigned long> seq(dim, 1);
    while (true) {
        out.push_back(seq);
        // next nondecreasing sequence with seq[0] pinned to 1
        size_t pos = dim;
        while (pos > 1) {
            --pos;
            if (seq[pos] < k) {
                ++seq[pos];
                for (size_t i = pos + 1; i < dim; ++i) seq[i] = seq[pos];
                break;
            }
            if (pos == 1) return out;
        }
        if (dim == 1) return out;
    }
}

Int multiset_oracle(unsigned k, unsigned dim) {
    if (k < 1 || dim < 1) throw invalid_input("multiset_oracle: k, dim must be >= 1");
    double work = 1;
    for (unsigned i = 0; i < dim; ++i) work *= k;
    if (dim > 8 || work > 16777216.0)  // 8^8
        throw bound_exceeded("multiset_oracle: k^dim too large (k=" + std::to_string(k) +
                             ", dim=" + std::to_string(dim) + ")");

    // walk all raw sequences; a multiset is a sequence modulo permutation,
    // so the sorted form is the canonical representative. Sorted forms are
    // deduplicated through a bitmap keyed base k+1.
    size_t keyspace = 1;
    for (unsigned i = 0; i < dim; ++i) keyspace *= k + 1;
    std::vector<bool> seen(keyspace, false);
    size_t classes = 0;

    std::vector<unsigned> seq(dim, 1);
    std::vector<unsigned> sorted(dim);
    while (true) {
        if (std::find(seq.begin(), seq.end(), 1u) != seq.end()) {
            sorted = seq;
            std::sort(sorted.begin(), sorted.end());
            size_t key = 0;
            for (unsigned v : sorted) key = key * (k + 1) + v;
            if (!seen[key]) {
                seen[key] = true;
                ++classes;
            }
        }
        size_t pos = dim;
        while (pos > 0) {
            --pos;
            if (seq[pos] < k) {
                ++seq[pos];
                break;
            }
            seq[pos] = 1;
            if (pos == 0) return Int(classes);
        }
    }
}

namespace {

int mod_pow_int(int base, int exp, int mod) {
    int r = 1 % mod;
    base %= mod;
    for (int i = 0; i < exp; ++i) r = r * base % mod;
    return r;
}

}  // namespace

Int nvs_isomorphism_oracle(int p, unsigned dim) {
    if ((p != 2 && p != 3 && p != 5) || dim < 1 || dim > 2)
        throw bound_exceeded("nvs_isomorphism_oracle: only p in {2,3,5}, dim in {1,2}");

    // multiplicative automorphisms of GF(p): x -> x^e with gcd(e, p-1) = 1;
    // e = 1 is the identity map
    std::vector<int> exps;
    const int period = std::max(1, p - 1);
    for (int e = 1; e <= period; ++e)
        if (std::gcd(e, period) == 1) exps.push_back(e);

    // scalar tuples with at least one identity coordinate
    std::vector<std::vector<int>> tuples;
    if (dim == 1) {
        tuples.push_back({1});
    } else {
        for (int e1 : exps)
            for (int e2 : exps)
                if (e1 == 1 || e2 == 1) tuples.push_back({e1, e2});
    }

    const int vcount = dim == 1 ? p : p * p;
    auto scalar_act = [&](const std::vector<int>& t, int v, int n) {
        // v is a packed vector over Z_p; coordinate i scales by n^(t[i])
        int out = 0, mul = 1;
        for (unsigned i = 0; i < dim; ++i) {
            const int vi = v % p;
            v /= p;
            const int ni = n == 0 ? 0 : mod_pow_int(n, t[i], p);
            out += vi * ni % p * mul;
            mul *= p;
        }
        return out;
    };

    // invertible dim x dim matrices over Z_p, acting on packed vectors
    std::vector<std::vector<int>> gl_maps;  // each is a permutation table on vectors
    const int mat_count = dim == 1 ? p : p * p * p * p;
    for (int mi = 0; mi < mat_count; ++mi) {
        int a, b, c, d;
        if (dim == 1) {
            a = mi;
            b = c = 0;
            d = 1;
            if (a == 0) continue;
        } else {
            a = mi % p;
            b = mi / p % p;
            c = mi / (p * p) % p;
            d = mi / (p * p * p) % p;
            if ((a * d - b * c) % p == 0) continue;
        }
        std::vector<int> map(vcount);
        for (int v = 0; v < vcount; ++v) {
            const int x = v % p, y = v / p;
            if (dim == 1)
                map[v] = a * x % p;
            else
                map[v] = (a * x + b * y) % p + (c * x + d * y) % p * p;
        }
        gl_maps.push_back(std::move(map));
    }

    auto equivalent = [&](const std::vector<int>& alpha, const std::vector<int>& beta) {
        for (const auto& theta : gl_maps) {
            bool ok = true;
            for (int v = 0; v < vcount && ok; ++v)
                for (int n = 0; n < p; ++n)
                    if (theta[scalar_act(alpha, v, n)] != scalar_act(beta, theta[v], n)) {
                        ok = false;
                        break;
                    }
            if (ok) return true;
        }
        return false;
    };

    // orbit count via union-find over the tuple list
    std::vector<size_t> root(tuples.size());
    for (size_t i = 0; i < root.size(); ++i) root[i] = i;
    auto find = [&](size_t x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (size_t i = 0; i < tuples.size(); ++i)
        for (size_t j = i + 1; j < tuples.size(); ++j)
            if (find(i) != find(j) && equivalent(tuples[i], tuples[j]))
                root[find(j)] = find(i);

    size_t orbits = 0;
    for (size_t i = 0; i < root.size(); ++i)
        if (find(i) == i) ++orbits;
    return Int(orbits);
}

}  // namespace nfk
