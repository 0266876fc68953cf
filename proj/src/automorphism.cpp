#include "nfk/automorphism.hpp"

#include <algorithm>

#include "nfk/errors.hpp"

namespace nfk {

namespace {

void reject_quaternion_exception(const DicksonParams& P, const char* where) {
    if (P.is_quaternion_exception())
        throw invalid_input(std::string(where) +
                            ": excluded pair (3,2); use the brute-force path");
}

}  // namespace

bool is_automorphism_pair(const Int& i, const Int& k, const DicksonParams& P) {
    reject_quaternion_exception(P, "is_automorphism_pair");
    if (gcd(mod_floor(i, P.m), P.m) != 1) return false;
    // k * (q^n-1)/(q-1) + t == i * t mod m, with (q^n-1)/(q-1) = t*n
    const Int lhs = mod_floor(k * P.t * P.n + P.t, P.m);
    const Int rhs = mod_floor(i * P.t, P.m);
    return lhs == rhs;
}

std::vector<Int> solve_k_fiber(const Int& i, const DicksonParams& P) {
    const Int Q = P.q - 1;
    if (Q == 0) return {Int(0)};
    const Int c = mod_floor(i - 1, Q);
    // k*n = c (mod Q): solvable iff g = gcd(n, Q) divides c, then exactly
    // g solutions spaced Q/g apart
    if (c % P.g != 0) return {};
    const Int qstar = Q / P.g;
    const Int nbar = Int(P.n) / P.g;
    const Int k0 = mod_floor((c / P.g) * invert_mod(mod_floor(nbar, qstar), qstar), qstar);
    std::vector<Int> out;
    for (Int k = k0; k < Q; k += qstar) out.push_back(k);
    return out;
}

std::vector<std::pair<Int, Int>> enumerate_T(const DicksonParams& P) {
    reject_quaternion_exception(P, "enumerate_T");
    std::vector<std::pair<Int, Int>> out;
    for (Int i = 0; i < P.m; ++i) {
        if (gcd(i, P.m) != 1) continue;
        for (const Int& k : solve_k_fiber(i, P)) out.emplace_back(i, k);
    }
    return out;
}

std::vector<AutPair> enumerate_S(const DicksonParams& P, const Int& max_size) {
    reject_quaternion_exception(P, "enumerate_S");
    const Int expected = aut_count_corrho(P);
    if (expected > max_size)
        throw bound_exceeded("enumerate_S: expected size " + dec(expected) +
                             " exceeds bound " + dec(max_size));
    const Int Q = P.q - 1;
    std::vector<AutPair> out;
    for (Int i = 0; i < P.m; ++i) {
        if (gcd(i, P.m) != 1) continue;
        auto fiber = solve_k_fiber(i, P);
        if (fiber.empty()) continue;
        // each solution mod q-1 lifts to t solutions mod m
        std::vector<Int> ks;
        for (const Int& k0 : fiber)
            for (Int j = 0; j < P.t; ++j) ks.push_back(k0 + j * Q);
        std::sort(ks.begin(), ks.end());
        for (const Int& k : ks) out.push_back({i, k});
    }
    return out;
}

GroupElement apply(const AutPair& phi, const GroupElement& x, const DicksonParams& P) {
    // a^alpha b^beta -> a^(i*alpha) (a^k b)^beta
    //                 = a^(i*alpha + k*(1 + q + ... + q^(beta-1))) b^beta
    Int geom = 0;
    for (unsigned j = 0; j < x.b_exp; ++j) geom = mod_floor(geom * P.q + 1, P.m);
    return make_element(P, phi.i * x.a_exp + phi.k * geom, Int(x.b_exp));
}

AutPair compose(const AutPair& phi, const AutPair& psi, const DicksonParams& P) {
    return {mod_floor(phi.i * psi.i, P.m), mod_floor(phi.k + phi.i * psi.k, P.m)};
}

AutPair aut_inverse(const AutPair& phi, const DicksonParams& P) {
    const Int iinv = invert_mod(mod_floor(phi.i, P.m), P.m);
    return {iinv, mod_floor(-iinv * phi.k, P.m)};
}

Int inner_count(const DicksonParams& P) { return P.t * P.n; }

Rat rho(const DicksonParams& P) {
    reject_quaternion_exception(P, "rho");
    Rat r(totient(P.q2) * P.g, P.q2);
    r.canonicalize();
    return r;
}

Int aut_count_corrho(const DicksonParams& P) {
    reject_quaternion_exception(P, "aut_count_corrho");
    Rat count = Rat(totient(P.m) * P.t * P.g) / rho(P);
    count.canonicalize();
    if (count.get_den() != 1)
        throw internal_error("aut_count_corrho: non-integer result " + dec(count));
    return count.get_num();
}

FlaggedCount aut_count_closed(const DicksonParams& P) {
    reject_quaternion_exception(P, "aut_count_closed");
    return {P.t * totient(P.t) * totient(P.q1) * P.q2, P.gcd_nt == 1};
}

Int aut_count_n2(const DicksonParams& P) {
    reject_quaternion_exception(P, "aut_count_n2");
    if (P.n != 2) throw invalid_input("aut_count_n2: requires n = 2");
    return totient((P.q * P.q - 1) / 2) * (P.q + 1);
}

std::optional<std::vector<int>> extend_generator_images(const FiniteGroupTable& g,
                                                        const std::vector<int>& images) {
    const int order = g.order;
    const auto& gens = g.generators;
    std::vector<int> img(order, -1);
    img[g.identity] = g.identity;

    // breadth-first closure over right multiplication by generators;
    // every (element, generator) edge gets checked, which is exactly the
    // homomorphism condition once the identity maps to itself
    std::vector<int> queue;
    queue.reserve(order);
    queue.push_back(g.identity);
    for (size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        const int ix = img[x];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const int y = g.at(x, gens[gi]);
            const int iy = g.at(ix, images[gi]);
            if (img[y] < 0) {
                img[y] = iy;
                queue.push_back(y);
            } else if (img[y] != iy) {
                return std::nullopt;
            }
        }
    }
    if (queue.size() != static_cast<size_t>(order))
        throw internal_error("extend_generator_images: generators do not generate");

    std::vector<char> seen(order, 0);
    for (int v : img) {
        if (seen[v]) return std::nullopt;  // not injective
        seen[v] = 1;
    }
    return img;
}

namespace {

// Iterate candidate image tuples in lexicographic order, filtered so the
// image of each generator has the same element order as the generator.
template <typename Visit>
void for_each_automorphism(const FiniteGroupTable& g, Visit&& visit) {
    const auto& gens = g.generators;
    const size_t s = gens.size();
    if (s == 0) {
        if (g.order == 1) visit(std::vector<int>{});
        return;
    }
    const std::vector<int> orders = element_orders(g);
    std::vector<std::vector<int>> buckets(s);
    for (size_t gi = 0; gi < s; ++gi)
        for (int x = 0; x < g.order; ++x)
            if (orders[x] == orders[gens[gi]]) buckets[gi].push_back(x);

    std::vector<size_t> pos(s, 0);
    std::vector<int> images(s);
    while (true) {
        for (size_t gi = 0; gi < s; ++gi) images[gi] = buckets[gi][pos[gi]];
        if (extend_generator_images(g, images)) visit(images);
        size_t gi = s;
        while (gi > 0) {
            --gi;
            if (++pos[gi] < buckets[gi].size()) break;
            pos[gi] = 0;
            if (gi == 0) return;
        }
    }
}

}  // namespace

std::vector<std::vector<int>> brute_force_generator_images(const FiniteGroupTable& g) {
    std::vector<std::vector<int>> out;
    for_each_automorphism(g, [&](const std::vector<int>& images) { out.push_back(images); });
    return out;
}

std::vector<std::vector<int>> brute_force_automorphisms(const FiniteGroupTable& g,
                                                        const Int& max_order) {
    if (Int(g.order) > max_order)
        throw bound_exceeded("brute_force_automorphisms: order " + std::to_string(g.order) +
                             " exceeds bound " + dec(max_order));
    std::vector<std::vector<int>> out;
    for_each_automorphism(g, [&](const std::vector<int>& images) {
        out.push_back(*extend_generator_images(g, images));
    });
    return out;
}

}  // namespace nfk
