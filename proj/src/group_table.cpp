#include "nfk/group_table.hpp"

#include <algorithm>

#include "nfk/errors.hpp"

namespace nfk {

std::string FiniteGroupTable::name_of(int x) const {
    if (x >= 0 && static_cast<size_t>(x) < element_names.size()) return element_names[x];
    return "#" + std::to_string(x);
}

GroupAxiomReport verify_group_axioms(const FiniteGroupTable& g) {
    GroupAxiomReport r;
    const int n = g.order;
    if (n <= 0 || g.mul.size() != static_cast<size_t>(n) * n) return r;

    r.closed = true;
    for (int32_t v : g.mul)
        if (v < 0 || v >= n) {
            r.closed = false;
            break;
        }
    if (!r.closed) return r;

    r.has_identity = true;
    for (int x = 0; x < n && r.has_identity; ++x)
        if (g.at(g.identity, x) != x || g.at(x, g.identity) != x) r.has_identity = false;

    r.has_inverses = true;
    for (int x = 0; x < n && r.has_inverses; ++x) {
        bool found = false;
        for (int y = 0; y < n; ++y)
            if (g.at(x, y) == g.identity && g.at(y, x) == g.identity) {
                found = true;
                break;
            }
        if (!found) r.has_inverses = false;
    }

    r.associative = true;
    for (int x = 0; x < n && r.associative; ++x)
        for (int y = 0; y < n && r.associative; ++y) {
            const int xy = g.at(x, y);
            for (int z = 0; z < n; ++z)
                if (g.at(xy, z) != g.at(x, g.at(y, z))) {
                    r.associative = false;
                    break;
                }
        }

    r.generators_generate =
        generated_subgroup(g, g.generators).size() == static_cast<size_t>(n);
    return r;
}

GroupAxiomReport verify_group_axioms_sampled(const FiniteGroupTable& g, int sample_stride) {
    GroupAxiomReport r;
    const int n = g.order;
    if (n <= 0 || g.mul.size() != static_cast<size_t>(n) * n) return r;
    if (sample_stride < 1) sample_stride = 1;

    r.closed = true;
    for (int32_t v : g.mul)
        if (v < 0 || v >= n) {
            r.closed = false;
            break;
        }
    if (!r.closed) return r;

    r.has_identity = true;
    for (int x = 0; x < n && r.has_identity; ++x)
        if (g.at(g.identity, x) != x || g.at(x, g.identity) != x) r.has_identity = false;

    r.has_inverses = true;
    for (int x = 0; x < n && r.has_inverses; ++x) {
        bool found = false;
        for (int y = 0; y < n; ++y)
            if (g.at(x, y) == g.identity && g.at(y, x) == g.identity) {
                found = true;
                break;
            }
        if (!found) r.has_inverses = false;
    }

    r.associative = true;
    for (int x = 0; x < n && r.associative; x += sample_stride)
        for (int y = 0; y < n && r.associative; y += sample_stride) {
            const int xy = g.at(x, y);
            for (int z = 0; z < n; z += sample_stride)
                if (g.at(xy, z) != g.at(x, g.at(y, z))) {
                    r.associative = false;
                    break;
                }
        }

    r.generators_generate =
        generated_subgroup(g, g.generators).size() == static_cast<size_t>(n);
    return r;
}

int element_order(const FiniteGroupTable& g, int x) {
    int acc = x;
    int ord = 1;
    while (acc != g.identity) {
        acc = g.at(acc, x);
        ++ord;
        if (ord > g.order) throw internal_error("element_order: no power reaches identity");
    }
    return ord;
}

std::vector<int> element_orders(const FiniteGroupTable& g) {
    std::vector<int> orders(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (orders[x]) continue;
        // walk the cyclic subgroup once and fill every power of x
        std::vector<int> cycle{g.identity};
        int acc = x;
        while (acc != g.identity) {
            cycle.push_back(acc);
            acc = g.at(acc, x);
        }
        const int n = static_cast<int>(cycle.size());
        orders[g.identity] = 1;
        for (int e = 1; e < n; ++e) {
            // order of x^e in <x> is n / gcd(n, e)
            int a = n, b = e;
            while (b) {
                int t = a % b;
                a = b;
                b = t;
            }
            orders[cycle[e]] = n / a;
        }
    }
    return orders;
}

int table_power(const FiniteGroupTable& g, int x, const Int& e) {
    if (e < 0) return table_power(g, table_inverse(g, x), -e);
    int result = g.identity;
    int base = x;
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = g.at(result, base);
        base = g.at(base, base);
        exp >>= 1;
    }
    return result;
}

int table_inverse(const FiniteGroupTable& g, int x) {
    for (int y = 0; y < g.order; ++y)
        if (g.at(x, y) == g.identity) return y;
    throw internal_error("table_inverse: no inverse found");
}

std::vector<int> center_elements(const FiniteGroupTable& g) {
    std::vector<int> out;
    for (int z = 0; z < g.order; ++z) {
        bool central = true;
        for (int x = 0; x < g.order; ++x)
            if (g.at(z, x) != g.at(x, z)) {
                central = false;
                break;
            }
        if (central) out.push_back(z);
    }
    return out;
}

std::vector<int> generated_subgroup(const FiniteGroupTable& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order, 0);
    std::vector<int> queue{g.identity};
    in[g.identity] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        for (int gen : gens) {
            const int y = g.at(x, gen);
            if (!in[y]) {
                in[y] = 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<int> greedy_generators(const FiniteGroupTable& g) {
    std::vector<int> gens;
    std::vector<int> have{g.identity};
    for (int x = 0; x < g.order && have.size() < static_cast<size_t>(g.order); ++x) {
        if (std::binary_search(have.begin(), have.end(), x)) continue;
        gens.push_back(x);
        have = generated_subgroup(g, gens);
    }
    return gens;
}

FiniteGroupTable cyclic_group(int n) {
    if (n < 1) throw invalid_input("cyclic_group: order must be >= 1");
    FiniteGroupTable g;
    g.order = n;
    g.identity = 0;
    g.mul.resize(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) g.set(x, y, (x + y) % n);
    if (n > 1) g.generators = {1};
    return g;
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    FiniteGroupTable g;
    g.order = a.order * b.order;
    g.identity = a.identity * b.order + b.identity;
    g.mul.resize(static_cast<size_t>(g.order) * g.order);
    for (int xa = 0; xa < a.order; ++xa)
        for (int xb = 0; xb < b.order; ++xb) {
            const int x = xa * b.order + xb;
            for (int ya = 0; ya < a.order; ++ya)
                for (int yb = 0; yb < b.order; ++yb)
                    g.set(x, ya * b.order + yb, a.at(xa, ya) * b.order + b.at(xb, yb));
        }
    for (int ga : a.generators) g.generators.push_back(ga * b.order + b.identity);
    for (int gb : b.generators) g.generators.push_back(a.identity * b.order + gb);
    return g;
}

std::vector<int> sylow_subgroup(const FiniteGroupTable& g, int p) {
    // target size: full p-part of |G|
    int target = 1;
    {
        int n = g.order;
        while (n % p == 0) {
            n /= p;
            target *= p;
        }
    }
    if (target == 1) return {g.identity};

    auto is_p_power_order = [&](int ord) {
        while (ord % p == 0) ord /= p;
        return ord == 1;
    };
    const std::vector<int> orders = element_orders(g);

    // seed with some element of order p
    std::vector<int> gens;
    for (int x = 0; x < g.order; ++x)
        if (orders[x] == p) {
            gens.push_back(x);
            break;
        }
    if (gens.empty()) throw internal_error("sylow_subgroup: no element of order p");

    std::vector<int> h = generated_subgroup(g, gens);
    while (h.size() < static_cast<size_t>(target)) {
        // find a p-element of N(H) outside H; one must exist while H is
        // not Sylow
        bool grew = false;
        for (int y = 0; y < g.order && !grew; ++y) {
            if (!is_p_power_order(orders[y])) continue;
            if (std::binary_search(h.begin(), h.end(), y)) continue;
            const int yinv = table_inverse(g, y);
            bool normalizes = true;
            for (int x : h)
                if (!std::binary_search(h.begin(), h.end(), g.at(g.at(y, x), yinv))) {
                    normalizes = false;
                    break;
                }
            if (!normalizes) continue;
            gens.push_back(y);
            h = generated_subgroup(g, gens);
            grew = true;
        }
        if (!grew) throw internal_error("sylow_subgroup: normalizer climb stalled");
    }
    if (h.size() != static_cast<size_t>(target))
        throw internal_error("sylow_subgroup: overshot p-part");
    return h;
}

bool is_cyclic_subgroup(const FiniteGroupTable& g, const std::vector<int>& elems) {
    const int n = static_cast<int>(elems.size());
    for (int x : elems)
        if (element_order(g, x) == n) return true;
    return false;
}

bool is_generalized_quaternion(const FiniteGroupTable& g, const std::vector<int>& elems) {
    const int n = static_cast<int>(elems.size());
    if (n < 8) return false;
    int k = n;
    while (k % 2 == 0) k /= 2;
    if (k != 1) return false;

    int involutions = 0;
    for (int x : elems)
        if (x != g.identity && g.at(x, x) == g.identity) ++involutions;
    if (involutions != 1) return false;

    // explicit presentation witnesses
    for (int x : elems) {
        if (element_order(g, x) != n / 2) continue;
        const int xinv = table_inverse(g, x);
        const int half_twist = table_power(g, x, Int(n / 4));
        for (int y : elems) {
            if (g.at(y, y) != half_twist) continue;
            const int yinv = table_inverse(g, y);
            if (g.at(g.at(y, x), yinv) == xinv) return true;
        }
    }
    return false;
}

}  // namespace nfk
