#include "nfk/nearfield.hpp"

#include <algorithm>
#include <ostream>

#include "nfk/automorphism.hpp"
#include "nfk/errors.hpp"

namespace nfk {

namespace {

using Poly = std::vector<int>;  // coefficients low-to-high, over Z_p

Poly poly_from_index(int idx, int p, unsigned len) {
    Poly c(len, 0);
    for (unsigned i = 0; i < len && idx; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

int poly_to_index(const Poly& c, int p) {
    int idx = 0;
    for (size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
}

int poly_degree(const Poly& c) {
    for (size_t i = c.size(); i-- > 0;)
        if (c[i]) return static_cast<int>(i);
    return -1;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus, int p) {
    const size_t l = modulus.size() - 1;
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // reduce by the monic modulus
    for (size_t d = prod.size(); d-- > l;) {
        const int c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (size_t i = 0; i < l; ++i)
            prod[d - l + i] = ((prod[d - l + i] - c * modulus[i]) % p + p * p) % p;
    }
    prod.resize(l);
    return prod;
}

// remainder of a by monic b
Poly poly_rem(Poly a, const Poly& b, int p) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const int c = a[da];
        for (int i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - c * b[i]) % p + p * p) % p;
    }
    return a;
}

bool poly_is_irreducible(const Poly& f, int p) {
    const int deg = poly_degree(f);
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        int lower = 1;
        for (int i = 0; i < d; ++i) lower *= p;
        for (int idx = 0; idx < lower; ++idx) {
            Poly g = poly_from_index(idx, p, d + 1);
            g[d] = 1;  // monic
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace

int FieldTable::neg(int x) const {
    for (int y = 0; y < order; ++y)
        if (add_at(x, y) == 0) return y;
    throw internal_error("FieldTable::neg: no additive inverse");
}

int FieldTable::pow(int x, const Int& e) const {
    if (x == 0) {
        if (e <= 0) throw invalid_input("FieldTable::pow: 0^e needs e > 0");
        return 0;
    }
    Int exp = mod_floor(e, Int(order - 1));
    int result = 1;
    int base = x;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) result = mul_at(result, base);
        base = mul_at(base, base);
        exp >>= 1;
    }
    return result;
}

FieldTable gf_build(int p, unsigned l, const Int& max_order) {
    if (p < 2 || !is_prime(Int(p))) throw invalid_input("gf_build: p must be prime");
    if (l < 1) throw invalid_input("gf_build: l must be >= 1");
    const Int order_big = pow_ui(Int(p), l);
    if (order_big > max_order)
        throw bound_exceeded("gf_build: order " + dec(order_big) + " exceeds bound " +
                             dec(max_order));
    const int order = static_cast<int>(to_ulong(order_big));

    FieldTable f;
    f.p = p;
    f.l = l;
    f.order = order;

    // smallest monic irreducible of degree l, constant term varying fastest
    int lower = 1;
    for (unsigned i = 0; i < l; ++i) lower *= p;
    for (int idx = 0; idx < lower; ++idx) {
        Poly cand = poly_from_index(idx, p, l + 1);
        cand[l] = 1;
        if (poly_is_irreducible(cand, p)) {
            f.modulus = cand;
            break;
        }
    }
    if (f.modulus.empty()) throw internal_error("gf_build: no irreducible polynomial found");

    f.add.resize(static_cast<size_t>(order) * order);
    f.mul.resize(static_cast<size_t>(order) * order);
    std::vector<Poly> elems(order);
    for (int x = 0; x < order; ++x) elems[x] = poly_from_index(x, p, l);
    for (int x = 0; x < order; ++x) {
        for (int y = 0; y < order; ++y) {
            Poly sum(l);
            for (unsigned i = 0; i < l; ++i) sum[i] = (elems[x][i] + elems[y][i]) % p;
            f.add[static_cast<size_t>(x) * order + y] =
                static_cast<int32_t>(poly_to_index(sum, p));
            f.mul[static_cast<size_t>(x) * order + y] = static_cast<int32_t>(
                poly_to_index(poly_mul_mod(elems[x], elems[y], f.modulus, p), p));
        }
    }
    return f;
}

NearfieldTable dickson_nearfield(const DicksonParams& P, const Int& max_order) {
    const Int order_big = pow_ui(P.q, P.n);
    if (order_big > max_order)
        throw bound_exceeded("dickson_nearfield (" + dec(P.q) + "," + std::to_string(P.n) +
                             "): order " + dec(order_big) + " exceeds bound " +
                             dec(max_order));

    NearfieldTable T;
    T.params = P;
    T.base = gf_build(static_cast<int>(to_ulong(P.p)), P.l * P.n, max_order);
    T.order = T.base.order;
    const int order = T.order;
    const Int mult_order = order_big - 1;

    // canonical generator: least index of full multiplicative order
    const auto mult_factors = factorize(mult_order).factors;
    auto has_full_order = [&](int x) {
        for (const auto& f : mult_factors)
            if (T.base.pow(x, mult_order / f.prime) == 1) return false;
        return true;
    };
    T.generator = 0;
    for (int x = 2; x < order; ++x)
        if (has_full_order(x)) {
            T.generator = x;
            break;
        }
    if (T.generator == 0 && mult_order > 1)
        throw internal_error("dickson_nearfield: no generator found");
    if (T.generator == 0) T.generator = 1;  // GF(2): the unit is the generator

    // discrete logs to base gamma
    std::vector<Int> dlog(order, 0);
    {
        int acc = 1;
        for (Int e = 0; e < mult_order; ++e) {
            dlog[acc] = e;
            acc = T.base.mul_at(acc, T.generator);
        }
        if (acc != 1) throw internal_error("dickson_nearfield: generator order mismatch");
    }

    // coupling residues (q^j - 1)/(q - 1) mod n must be a complete residue
    // system; the class of y is the j whose residue matches dlog(y) mod n
    const int n = static_cast<int>(P.n);
    const int qmodn = static_cast<int>(to_ulong(mod_floor(P.q, Int(n))));
    std::vector<int> residue_to_class(n, -1);
    {
        int r = 0;  // (q^j - 1)/(q - 1) mod n, iterated as r -> r*q + 1
        for (int j = 0; j < n; ++j) {
            if (residue_to_class[r] != -1)
                throw internal_error(
                    "dickson_nearfield: coupling residues not a complete system mod n");
            residue_to_class[r] = j;
            r = (r * qmodn + 1) % n;
        }
    }
    T.coupling_class.assign(order, 0);
    for (int y = 1; y < order; ++y) {
        const int res = static_cast<int>(to_ulong(mod_floor(dlog[y], Int(n))));
        T.coupling_class[y] = residue_to_class[res];
    }

    // frobenius powers x -> x^(q^j)
    std::vector<std::vector<int>> frob(n, std::vector<int>(order));
    for (int x = 0; x < order; ++x) frob[0][x] = x;
    if (n > 1) {
        std::vector<int> f1(order);
        f1[0] = 0;
        for (int x = 1; x < order; ++x) f1[x] = T.base.pow(x, P.q);
        for (int j = 1; j < n; ++j)
            for (int x = 0; x < order; ++x) frob[j][x] = f1[frob[j - 1][x]];
    }

    T.mul.resize(static_cast<size_t>(order) * order);
    for (int y = 0; y < order; ++y) {
        const auto& fy = frob[T.coupling_class[y]];
        for (int x = 0; x < order; ++x)
            T.mul[static_cast<size_t>(x) * order + y] =
                y == 0 ? 0 : static_cast<int32_t>(T.base.mul_at(fy[x], y));
    }
    return T;
}

NearfieldAxiomReport verify_nearfield_axioms(const NearfieldTable& T) {
    NearfieldAxiomReport r;
    const int order = T.order;
    const int p = T.base.p;

    // additive structure: abelian group with identity 0, every element of
    // order p
    r.additive_abelian_group = true;
    for (int x = 0; x < order && r.additive_abelian_group; ++x) {
        if (T.add_at(0, x) != x || T.add_at(x, 0) != x) r.additive_abelian_group = false;
        bool inverse = false;
        for (int y = 0; y < order; ++y)
            if (T.add_at(x, y) == 0) inverse = true;
        if (!inverse) r.additive_abelian_group = false;
    }
    for (int x = 0; x < order && r.additive_abelian_group; ++x)
        for (int y = 0; y <= x; ++y) {
            if (T.add_at(x, y) != T.add_at(y, x)) {
                r.additive_abelian_group = false;
                break;
            }
            for (int z = 0; z < order; ++z)
                if (T.add_at(T.add_at(x, y), z) != T.add_at(x, T.add_at(y, z))) {
                    r.additive_abelian_group = false;
                    break;
                }
            if (!r.additive_abelian_group) break;
        }

    r.elementary_abelian = true;
    for (int x = 1; x < order; ++x) {
        int acc = x;
        for (int i = 1; i < p; ++i) acc = T.add_at(acc, x);
        if (acc != 0) {
            r.elementary_abelian = false;
            break;
        }
    }

    // multiplicative group on the nonzero elements
    r.multiplicative_group = order >= 2;
    for (int x = 1; x < order && r.multiplicative_group; ++x) {
        if (T.mul_at(1, x) != x || T.mul_at(x, 1) != x) r.multiplicative_group = false;
        bool inverse = false;
        for (int y = 1; y < order; ++y) {
            if (T.mul_at(x, y) == 0) r.multiplicative_group = false;  // not closed
            if (T.mul_at(x, y) == 1 && T.mul_at(y, x) == 1) inverse = true;
        }
        if (!inverse) r.multiplicative_group = false;
    }
    for (int x = 1; x < order && r.multiplicative_group; ++x)
        for (int y = 1; y < order && r.multiplicative_group; ++y) {
            const int xy = T.mul_at(x, y);
            for (int z = 1; z < order; ++z)
                if (T.mul_at(xy, z) != T.mul_at(x, T.mul_at(y, z))) {
                    r.multiplicative_group = false;
                    break;
                }
        }

    r.zero_annihilates = true;
    for (int x = 0; x < order; ++x)
        if (T.mul_at(0, x) != 0 || T.mul_at(x, 0) != 0) {
            r.zero_annihilates = false;
            break;
        }

    r.right_distributive = true;
    for (int a = 0; a < order && r.right_distributive; ++a)
        for (int b = 0; b < order && r.right_distributive; ++b) {
            const int ab = T.add_at(a, b);
            for (int c = 0; c < order; ++c)
                if (T.mul_at(ab, c) != T.add_at(T.mul_at(a, c), T.mul_at(b, c))) {
                    r.right_distributive = false;
                    r.right_failure = {{a, b, c}};
                    break;
                }
        }

    r.left_distributive = true;
    for (int a = 0; a < order && r.left_distributive; ++a)
        for (int b = 0; b < order && r.left_distributive; ++b) {
            for (int c = 0; c < order; ++c)
                if (T.mul_at(a, T.add_at(b, c)) !=
                    T.add_at(T.mul_at(a, b), T.mul_at(a, c))) {
                    r.left_distributive = false;
                    r.left_failure = {{a, b, c}};
                    break;
                }
        }

    return r;
}

FiniteGroupTable multiplicative_group(const NearfieldTable& T) {
    FiniteGroupTable g;
    g.order = T.order - 1;
    g.identity = 0;
    g.mul.resize(static_cast<size_t>(g.order) * g.order);
    for (int x = 1; x < T.order; ++x)
        for (int y = 1; y < T.order; ++y) g.set(x - 1, y - 1, T.mul_at(x, y) - 1);
    return g;
}

std::pair<int, int> match_presentation(const NearfieldTable& T) {
    const DicksonParams& P = T.params;
    if (P.n < 2) throw invalid_input("match_presentation: needs n >= 2");
    FiniteGroupTable g = multiplicative_group(T);
    const std::vector<int> orders = element_orders(g);
    const int m = static_cast<int>(to_ulong(P.m));

    for (int A = 0; A < g.order; ++A) {
        if (orders[A] != m) continue;
        const int Aq = table_power(g, A, P.q);
        const int At = table_power(g, A, P.t);
        for (int B = 0; B < g.order; ++B) {
            if (table_power(g, B, Int(P.n)) != At) continue;
            if (g.at(B, A) != g.at(Aq, B)) continue;
            if (generated_subgroup(g, {A, B}).size() != static_cast<size_t>(g.order))
                continue;
            return {A + 1, B + 1};  // back to field indices
        }
    }
    throw internal_error("match_presentation: no presentation match for (" + dec(P.q) + "," +
                         std::to_string(P.n) + ")");
}

std::vector<std::vector<int>> nearfield_automorphisms(const NearfieldTable& T,
                                                      const Int& max_order) {
    if (Int(T.order) > max_order)
        throw bound_exceeded("nearfield_automorphisms: order " + std::to_string(T.order) +
                             " exceeds bound " + dec(max_order));
    FiniteGroupTable g = multiplicative_group(T);
    if (T.params.n >= 2) {
        auto [A, B] = match_presentation(T);
        g.generators = {A - 1, B - 1};
    } else {
        g.generators = {T.generator - 1};
    }

    // a handful of fixed addition probes reject most multiplicative-only
    // candidates before the full quadratic additivity scan
    std::vector<std::pair<int, int>> probes;
    for (int x = 1; x < T.order && probes.size() < 8; x += 1 + T.order / 5)
        for (int y = x; y < T.order && probes.size() < 8; y += 1 + T.order / 3)
            probes.emplace_back(x, y);

    std::vector<std::vector<int>> out;
    for (const auto& images : brute_force_generator_images(g)) {
        const auto mult_map = extend_generator_images(g, images);
        std::vector<int> theta(T.order);
        theta[0] = 0;
        for (int x = 1; x < T.order; ++x) theta[x] = (*mult_map)[x - 1] + 1;

        bool additive = true;
        for (const auto& [x, y] : probes)
            if (theta[T.add_at(x, y)] != T.add_at(theta[x], theta[y])) {
                additive = false;
                break;
            }
        for (int x = 0; x < T.order && additive; ++x)
            for (int y = x; y < T.order; ++y)
                if (theta[T.add_at(x, y)] != T.add_at(theta[x], theta[y])) {
                    additive = false;
                    break;
                }
        if (additive) out.push_back(std::move(theta));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void write_nearfield_csv(const NearfieldTable& T, std::ostream& out) {
    out << "# nearfield " << dec(T.params.q) << " " << T.params.n << "\n";
    for (int i = 0; i < T.order; ++i)
        for (int j = 0; j < T.order; ++j)
            out << i << " " << j << " " << T.add_at(i, j) << " " << T.mul_at(i, j) << "\n";
}

}  // namespace nfk
