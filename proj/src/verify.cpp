#include "nfk/verify.hpp"

#include <algorithm>
#include <set>

#include "nfk/automorphism.hpp"
#include "nfk/catalog.hpp"
#include "nfk/errors.hpp"
#include "nfk/nearfield.hpp"
#include "nfk/nvs.hpp"

namespace nfk {

namespace {

const std::vector<std::string> kOperations = {
    "numtheory.factorize", "numtheory.totient", "numtheory.multiplicative_order",
    "numtheory.split_by_primes", "numtheory.multichoose", "numtheory.is_prime_power",
    "dickson.validate_dickson_pair", "dickson.elem_mul", "dickson.elem_power",
    "dickson.elem_order", "dickson.center", "dickson.build_group_table",
    "dickson.metacyclic_decomposition", "dickson.sylow2_cyclic",
    "nearfield.gf_build", "nearfield.dickson_nearfield", "nearfield.verify_nearfield_axioms",
    "nearfield.match_presentation", "nearfield.nearfield_automorphisms",
    "nearfield.nearfield_aut_order",
    "automorphism.is_automorphism_pair", "automorphism.enumerate_S",
    "automorphism.enumerate_T", "automorphism.solve_k_fiber", "automorphism.apply",
    "automorphism.compose", "automorphism.inner_count", "automorphism.rho",
    "automorphism.aut_count_corrho", "automorphism.aut_count_closed",
    "automorphism.aut_count_n2", "automorphism.brute_force_automorphisms",
    "catalog.exceptional_table", "catalog.exceptional_group", "catalog.field_counts",
    "catalog.factor_index",
    "nvs.coset_count", "nvs.count_nvs", "nvs.enumerate_classes", "nvs.multiset_oracle",
    "nvs.nvs_isomorphism_oracle",
};

struct Checker {
    VerifyOutcome out;
    std::set<std::string> covered;

    void cover(std::initializer_list<const char*> ops) {
        for (const char* op : ops) covered.insert(op);
    }

    void check(const std::string& name, bool pass, const std::string& detail,
               Report::Provenance prov) {
        ++out.checks;
        if (pass)
            out.report.add_result(name, detail.empty() ? "pass" : "pass(" + detail + ")",
                                  prov);
        else {
            out.report.add_result(name, "FAIL(" + detail + ")", prov);
            ++out.failures;
        }
    }

    // A mismatch the library documents and reports on purpose; fatal only
    // if the documented relationship itself breaks.
    void discrepancy(const std::string& name, const std::string& detail,
                     Report::Provenance prov) {
        ++out.checks;
        ++out.expected_discrepancies;
        out.report.add_result(name, "expected-discrepancy(" + detail + ")", prov);
        out.report.warn(name + ": " + detail);
    }
};

std::string pair_tag(const DicksonParams& P) {
    return "dickson:" + dec(P.q) + "," + std::to_string(P.n);
}

std::vector<DicksonParams> scan_pairs(const Int& max_order) {
    std::vector<DicksonParams> out;
    for (unsigned n = 2; pow_ui(Int(2), n) - 1 <= max_order; ++n) {
        for (Int q = 2; pow_ui(q, n) - 1 <= max_order; ++q) {
            try {
                out.push_back(validate_dickson_pair(q, n));
            } catch (const invalid_input&) {
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DicksonParams& a, const DicksonParams& b) {
        if (a.group_order() != b.group_order()) return a.group_order() < b.group_order();
        if (a.q != b.q) return a.q < b.q;
        return a.n < b.n;
    });
    return out;
}

// ---------------------------------------------------------------- numtheory

void numtheory_suite(Checker& c) {
    c.cover({"numtheory.factorize", "numtheory.totient", "numtheory.multiplicative_order",
             "numtheory.split_by_primes", "numtheory.multichoose",
             "numtheory.is_prime_power"});

    bool ok = factorize(Int(1)).factors.empty();
    std::string detail;
    for (int n = 1; n <= 400 && ok; ++n) {
        const Factorization f = factorize(Int(n));
        if (f.reassemble() != n) {
            ok = false;
            detail = "reassemble failed at " + std::to_string(n);
        }
        for (size_t i = 0; i < f.factors.size() && ok; ++i) {
            if (!is_prime(f.factors[i].prime) ||
                (i && f.factors[i].prime <= f.factors[i - 1].prime)) {
                ok = false;
                detail = "bad factor list at " + std::to_string(n);
            }
        }
    }
    c.check("numtheory factorize", ok, detail, Report::Provenance::enumeration);

    ok = totient(Int(1)) == 1 && totient(Int(12)) == 4 && totient(Int(84)) == 24;
    detail.clear();
    for (int n = 1; n <= 400 && ok; ++n) {
        int count = 0;
        for (int a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1) ++count;
        if (totient(Int(n)) != count) {
            ok = false;
            detail = "totient mismatch at " + std::to_string(n);
        }
    }
    c.check("numtheory totient vs direct count", ok, detail,
            Report::Provenance::enumeration);

    ok = multiplicative_order(Int(1), Int(5)) == 1 &&
         multiplicative_order(Int(7), Int(2)) == 1 &&
         multiplicative_order(Int(5), Int(3)) == 2;
    for (int n = 2; n <= 60 && ok; ++n)
        for (int a = 1; a < n && ok; ++a) {
            if (std::gcd(a, n) != 1) continue;
            const Int e = multiplicative_order(Int(a), Int(n));
            if (powm(Int(a), e, Int(n)) != 1 || totient(Int(n)) % e != 0) ok = false;
            for (Int j = 1; j < e && ok; ++j)
                if (powm(Int(a), j, Int(n)) == 1) ok = false;
        }
    c.check("numtheory multiplicative_order", ok, "", Report::Provenance::enumeration);

    ok = split_by_primes(Int(6), Int(3)) == std::pair<Int, Int>(Int(2), Int(3)) &&
         split_by_primes(Int(4), Int(2)) == std::pair<Int, Int>(Int(1), Int(4)) &&
         split_by_primes(Int(10), Int(2)) == std::pair<Int, Int>(Int(5), Int(2));
    for (int x = 1; x <= 60 && ok; ++x)
        for (int n = 1; n <= 20 && ok; ++n) {
            const auto [q1, q2] = split_by_primes(Int(x), Int(n));
            if (q1 * q2 != x || gcd(q1, q2) != 1) ok = false;
            for (const auto& f : factorize(Int(n)).factors)
                if (q1 % f.prime == 0) ok = false;
            for (const auto& f : factorize(q2).factors)
                if (Int(n) % f.prime != 0) ok = false;
        }
    c.check("numtheory split_by_primes", ok, "", Report::Provenance::enumeration);

    ok = true;
    for (unsigned k = 1; k <= 6 && ok; ++k)
        for (unsigned r = 0; r <= 6 && ok; ++r) {
            // independent count of nondecreasing length-r sequences over {1..k}
            long direct = 0;
            std::vector<unsigned> seq(r, 1);
            while (true) {
                if (std::is_sorted(seq.begin(), seq.end())) ++direct;
                size_t pos = r;
                bool done = r == 0;
                while (pos > 0) {
                    --pos;
                    if (seq[pos] < k) {
                        ++seq[pos];
                        break;
                    }
                    seq[pos] = 1;
                    if (pos == 0) done = true;
                }
                if (done) break;
            }
            if (r == 0) direct = 1;
            if (multichoose(Int(k), r) != direct) ok = false;
        }
    c.check("numtheory multichoose vs enumeration", ok, "",
            Report::Provenance::enumeration);

    ok = true;
    {
        const PrimePower a = is_prime_power(Int(9));
        const PrimePower b = is_prime_power(Int(7));
        ok = a.prime == 3 && a.exponent == 2 && b.prime == 7 && b.exponent == 1 &&
             !try_prime_power(Int(6)) && !try_prime_power(Int(36)) &&
             try_prime_power(Int(1024)).has_value();
    }
    c.check("numtheory is_prime_power", ok, "", Report::Provenance::formula);
}

void rejection_suite(Checker& c) {
    c.cover({"dickson.validate_dickson_pair"});
    auto rejected = [](const Int& q, unsigned n) {
        try {
            validate_dickson_pair(q, n);
            return false;
        } catch (const invalid_input&) {
            return true;
        }
    };
    c.check("pair rejection dickson:3,4", rejected(Int(3), 4), "4|n but 4 does not divide q-1",
            Report::Provenance::formula);
    c.check("pair rejection dickson:5,3", rejected(Int(5), 3), "3 does not divide q-1",
            Report::Provenance::formula);
    c.check("pair rejection dickson:6,2", rejected(Int(6), 2), "q not prime power",
            Report::Provenance::formula);
    c.check("pair rejection dickson:2,2", rejected(Int(2), 2), "2 does not divide q-1",
            Report::Provenance::formula);
}

// ------------------------------------------------------------- per pair

void pair_params_suite(Checker& c, const DicksonParams& P) {
    c.cover({"dickson.validate_dickson_pair", "dickson.sylow2_cyclic"});
    const std::string tag = pair_tag(P);
    bool ok = P.m * P.n == pow_ui(P.q, P.n) - 1 && P.t * (P.q - 1) == P.m &&
              P.q1 * P.q2 == P.q - 1 && gcd(P.q1, P.q2) == 1 &&
              P.g == gcd(Int(P.n), P.q - 1) && (P.gcd_nt == 1 || P.gcd_nt == 2) &&
              P.gcd_nt == gcd(P.q - 1, P.t);
    const bool split = (P.n % 2 == 1) || mod_floor(P.q, Int(4)) != 3;
    ok = ok && (P.gcd_nt == 1) == split && sylow2_cyclic(P) == split;
    for (const auto& f : factorize(Int(P.n)).factors)
        if (P.q1 % f.prime == 0) ok = false;
    c.check(tag + " params", ok,
            "m=" + dec(P.m) + " t=" + dec(P.t) + " q1=" + dec(P.q1) + " q2=" + dec(P.q2),
            Report::Provenance::formula);
}

void pair_relations_suite(Checker& c, const DicksonParams& P) {
    c.cover({"dickson.elem_mul", "dickson.elem_power", "dickson.elem_order",
             "dickson.center"});
    const std::string tag = pair_tag(P);
    const GroupElement a = elem_a(P), b = elem_b(P);

    bool ok = elem_power(a, P.m, P) == identity_element();
    const GroupElement at = elem_power(a, P.t, P);
    ok = ok && elem_power(b, Int(P.n), P) == at;
    ok = ok && elem_mul(b, a, P) == elem_mul(elem_power(a, P.q, P), b, P);
    ok = ok && elem_order(a, P) == P.m && elem_order(at, P) == P.q - 1;
    ok = ok && center(P).first == at && center(P).second == P.q - 1;
    const GroupElement ab = elem_mul(a, b, P);
    ok = ok && elem_mul(ab, elem_inverse(ab, P), P) == identity_element();
    ok = ok && elem_power(ab, elem_order(ab, P), P) == identity_element();
    c.check(tag + " relations", ok, "", Report::Provenance::formula);
}

void pair_congruence_suite(Checker& c, const DicksonParams& P, const Int& enum_bound) {
    const std::string tag = pair_tag(P);
    if (P.is_quaternion_exception()) {
        // the characterization excludes (3,2); make sure the library
        // refuses to apply it there
        bool rejected = false;
        try {
            enumerate_S(P, Int(1000));
        } catch (const invalid_input&) {
            rejected = true;
        }
        c.check(tag + " formula exclusion", rejected, "congruence ops reject (3,2)",
                Report::Provenance::formula);
        return;
    }
    if (P.m > enum_bound) {
        c.check(tag + " S/T enumeration", true, "skipped: m above enumeration bound",
                Report::Provenance::enumeration);
        return;
    }

    c.cover({"automorphism.is_automorphism_pair", "automorphism.enumerate_S",
             "automorphism.enumerate_T", "automorphism.solve_k_fiber", "automorphism.apply",
             "automorphism.compose", "automorphism.inner_count", "automorphism.rho",
             "automorphism.aut_count_corrho", "automorphism.aut_count_closed"});

    const auto S = enumerate_S(P, Int(10000000));
    const auto T = enumerate_T(P);

    // |S| = t |T|
    c.check(tag + " |S|=t|T|", Int(S.size()) == P.t * Int(T.size()),
            dec(Int(S.size())) + " vs " + dec(P.t) + "*" + dec(Int(T.size())),
            Report::Provenance::enumeration);

    // fibers: empty or exactly g residues, a coset of <(q-1)/g>, nonempty
    // exactly when g | i-1
    bool fibers_ok = true;
    Int units = 0, solvable_units = 0;
    const Int qstar = (P.q - 1) / P.g;
    for (Int i = 0; i < P.m; ++i) {
        if (gcd(i, P.m) != 1) continue;
        ++units;
        const auto fiber = solve_k_fiber(i, P);
        const bool expect_nonempty = mod_floor(i - 1, P.g) == 0;
        if (expect_nonempty != !fiber.empty()) fibers_ok = false;
        if (fiber.empty()) continue;
        ++solvable_units;
        if (Int(fiber.size()) != P.g) fibers_ok = false;
        for (size_t j = 0; j < fiber.size(); ++j) {
            if (j && fiber[j] - fiber[j - 1] != qstar) fibers_ok = false;
            if (mod_floor(fiber[j] * P.n - (i - 1), P.q - 1) != 0) fibers_ok = false;
        }
    }
    c.check(tag + " fiber sizes", fibers_ok, "in {0, " + dec(P.g) + "}",
            Report::Provenance::enumeration);

    // unit fraction: |A|/phi(m) = 1/rho with rho = phi(q2) g / q2
    Rat lhs(solvable_units, units);
    lhs.canonicalize();
    Rat inv_rho = Rat(1) / rho(P);
    inv_rho.canonicalize();
    c.check(tag + " unit fraction 1/rho", lhs == inv_rho && units == totient(P.m),
            dec(lhs), Report::Provenance::enumeration);

    // the counting triangle, formula side
    const Int corrho = aut_count_corrho(P);
    c.check(tag + " corrho=|S|", corrho == Int(S.size()), dec(corrho),
            Report::Provenance::formula);

    if (P.n == 2) {
        c.cover({"automorphism.aut_count_n2"});
        const Int n2 = aut_count_n2(P);
        c.check(tag + " n2 lemma", n2 == Int(S.size()), dec(n2),
                Report::Provenance::formula);
    }

    const FlaggedCount closed = aut_count_closed(P);
    if (closed.trusted) {
        c.check(tag + " closed form", closed.value == Int(S.size()), dec(closed.value),
                Report::Provenance::formula);
    } else {
        // documented advisory case: the product formula counts exactly half
        if (closed.value * 2 == Int(S.size()))
            c.discrepancy(tag + " closed form",
                          dec(closed.value) + " vs enumerated " + dec(Int(S.size())) +
                              " (gcd(n,t)=2, formula counts half)",
                          Report::Provenance::formula);
        else
            c.check(tag + " closed form", false,
                    "advisory value " + dec(closed.value) + " not half of " +
                        dec(Int(S.size())),
                    Report::Provenance::formula);
    }

    // every enumerated pair satisfies the congruence; identity present
    bool members_ok = is_automorphism_pair(Int(1), Int(0), P);
    for (const AutPair& s : S)
        if (!is_automorphism_pair(s.i, s.k, P)) members_ok = false;
    members_ok = members_ok && std::is_sorted(S.begin(), S.end());
    members_ok =
        members_ok && std::binary_search(S.begin(), S.end(), AutPair{Int(1), Int(0)});
    c.check(tag + " S membership", members_ok, "", Report::Provenance::enumeration);

    // group structure under composition
    bool group_ok = true;
    const size_t stride = S.size() > 24 ? S.size() / 11 + 1 : 1;
    for (size_t x = 0; x < S.size() && group_ok; x += stride)
        for (size_t y = 0; y < S.size() && group_ok; y += stride) {
            const AutPair comp = compose(S[x], S[y], P);
            if (!is_automorphism_pair(comp.i, comp.k, P)) group_ok = false;
        }
    for (size_t x = 0; x < S.size() && group_ok; x += stride) {
        const AutPair inv = aut_inverse(S[x], P);
        if (!is_automorphism_pair(inv.i, inv.k, P)) group_ok = false;
        if (compose(S[x], inv, P) != aut_identity()) group_ok = false;
    }
    c.check(tag + " compose group", group_ok, "", Report::Provenance::enumeration);

    // functoriality of apply on a few elements
    bool apply_ok = true;
    const GroupElement samples[3] = {elem_a(P), elem_b(P), elem_mul(elem_a(P), elem_b(P), P)};
    for (size_t x = 0; x < S.size() && apply_ok; x += stride)
        for (size_t y = 0; y < S.size() && apply_ok; y += stride)
            for (const GroupElement& e : samples)
                if (apply(compose(S[x], S[y], P), e, P) !=
                    apply(S[x], apply(S[y], e, P), P)) {
                    apply_ok = false;
                    break;
                }
    c.check(tag + " apply respects compose", apply_ok, "", Report::Provenance::formula);

    // inner automorphisms: conjugation by b is (q, 0), by a is (1, 1-q);
    // their closure has order t*n, is inside S, and t*n divides |S|
    const Int tn = inner_count(P);
    std::set<AutPair> inner;
    {
        const AutPair conj_b{mod_floor(P.q, P.m), Int(0)};
        const AutPair conj_a{Int(1), mod_floor(1 - P.q, P.m)};
        std::vector<AutPair> queue{aut_identity()};
        inner.insert(aut_identity());
        for (size_t head = 0; head < queue.size(); ++head) {
            for (const AutPair& gen : {conj_b, conj_a}) {
                const AutPair next = compose(queue[head], gen, P);
                if (inner.insert(next).second) queue.push_back(next);
            }
            if (inner.size() > 100000) break;
        }
    }
    bool inner_ok = Int(inner.size()) == tn && Int(S.size()) % tn == 0;
    for (const AutPair& phi : inner)
        if (!std::binary_search(S.begin(), S.end(), phi)) inner_ok = false;
    c.check(tag + " inner automorphisms", inner_ok, "tn=" + dec(tn),
            Report::Provenance::enumeration);
}

void pair_table_suite(Checker& c, const DicksonParams& P, const VerifyOptions& opt) {
    const std::string tag = pair_tag(P);
    c.cover({"dickson.build_group_table", "automorphism.brute_force_automorphisms",
             "automorphism.apply"});

    const FiniteGroupTable tbl = build_group_table(P, opt.group_table_bound);
    const int order = tbl.order;
    const int n = static_cast<int>(P.n);

    // table sanity: axioms (full scan when cheap), agreement with elem_mul
    GroupAxiomReport ax = order <= 400 ? verify_group_axioms(tbl)
                                       : verify_group_axioms_sampled(tbl, order / 37 + 1);
    bool agree = true;
    const int stride = order / 17 + 1;
    for (int x = 0; x < order && agree; x += stride)
        for (int y = 0; y < order; y += stride) {
            const GroupElement prod = elem_mul(element_at(P, x), element_at(P, y), P);
            if (tbl.at(x, y) != element_index(P, prod)) {
                agree = false;
                break;
            }
        }
    c.check(tag + " table axioms", ax.ok() && agree,
            order <= 400 ? "full associativity" : "sampled associativity",
            Report::Provenance::brute_force);

    // center from the table equals <a^t> of order q-1
    {
        std::vector<int> expected;
        const int t = static_cast<int>(to_ulong(P.t));
        const int m = static_cast<int>(to_ulong(P.m));
        for (int j = 0; j * t < m; ++j) expected.push_back((j * t % m) * n);
        std::sort(expected.begin(), expected.end());
        const std::vector<int> got = center_elements(tbl);
        c.check(tag + " center=<a^t>",
                got == expected && Int(got.size()) == P.q - 1,
                "order " + dec(Int(got.size())), Report::Provenance::brute_force);
    }

    // split metacyclic shape with generator witnesses
    if (P.gcd_nt == 1) {
        c.cover({"dickson.metacyclic_decomposition"});
        const MetacyclicDescriptor d = metacyclic_decomposition(P);
        bool ok = d.r * d.s == P.group_order() && d.r == P.t * d.r_bar &&
                  d.s == Int(P.n) * d.s_bar && d.r_bar * d.s_bar == P.q - 1 &&
                  d.r_bar == P.q1 && d.s_bar == P.q2 && gcd(d.r_bar, Int(P.n)) == 1;
        for (const auto& f : factorize(Int(P.n)).factors)
            if (d.s_bar % f.prime != 0) ok = false;
        // witness relations, computed with element arithmetic
        ok = ok && elem_power(d.witness_a, d.r, P) == identity_element();
        ok = ok && elem_power(d.witness_b, d.s, P) == identity_element();
        const GroupElement conj = elem_mul(
            elem_mul(d.witness_b, d.witness_a, P), elem_inverse(d.witness_b, P), P);
        ok = ok && conj == elem_power(d.witness_a, d.twist, P);
        // the witnesses generate the whole group
        const auto sub = generated_subgroup(
            tbl, {element_index(P, d.witness_a), element_index(P, d.witness_b)});
        ok = ok && Int(sub.size()) == P.group_order();
        c.check(tag + " metacyclic D(r,s;k)", ok,
                "D(" + dec(d.r) + "," + dec(d.s) + ";" + dec(d.twist) + ")",
                Report::Provenance::formula);
    } else {
        bool rejected = false;
        try {
            metacyclic_decomposition(P);
        } catch (const invalid_input&) {
            rejected = true;
        }
        c.check(tag + " metacyclic rejected", rejected, "gcd(n,t)=2",
                Report::Provenance::formula);
    }

    // Sylow subgroups: cyclic or generalized quaternion, and the 2-Sylow
    // cyclicity matches the arithmetic criterion
    {
        bool ok = true;
        std::string detail;
        for (const auto& f : factorize(Int(order)).factors) {
            const int p = static_cast<int>(to_ulong(f.prime));
            const auto syl = sylow_subgroup(tbl, p);
            const bool cyc = is_cyclic_subgroup(tbl, syl);
            const bool quat = !cyc && is_generalized_quaternion(tbl, syl);
            if (!cyc && !quat) {
                ok = false;
                detail = "p=" + std::to_string(p);
            }
            if (p == 2 && cyc != sylow2_cyclic(P)) {
                ok = false;
                detail = "2-Sylow cyclicity mismatch";
            }
        }
        c.check(tag + " sylow dichotomy", ok, detail, Report::Provenance::brute_force);
    }

    // brute-force automorphism search on the table
    const auto images = brute_force_generator_images(tbl);
    if (P.is_quaternion_exception()) {
        c.check(tag + " brute count", images.size() == 24,
                std::to_string(images.size()) + " automorphisms of the quaternion group",
                Report::Provenance::brute_force);
        return;
    }

    const auto S = enumerate_S(P, Int(10000000));
    c.check(tag + " aut triangle", Int(images.size()) == aut_count_corrho(P) &&
                                       images.size() == S.size(),
            std::to_string(images.size()), Report::Provenance::brute_force);

    // the congruence pairs and the found automorphisms are literally the
    // same maps: compare generator images
    {
        std::vector<std::pair<int, int>> from_pairs, from_brute;
        from_pairs.reserve(S.size());
        for (const AutPair& s : S)
            from_pairs.emplace_back(element_index(P, apply(s, elem_a(P), P)),
                                    element_index(P, apply(s, elem_b(P), P)));
        std::sort(from_pairs.begin(), from_pairs.end());
        from_brute.reserve(images.size());
        for (const auto& im : images) from_brute.emplace_back(im[0], im[1]);
        std::sort(from_brute.begin(), from_brute.end());
        c.check(tag + " aut bijection", from_pairs == from_brute, "generator images match",
                Report::Provenance::brute_force);
    }

    // every automorphism keeps <a> inside <a> and sends b to a^k b form
    {
        bool ok = true;
        for (const auto& im : images)
            if (im[0] % n != 0 || im[1] % n != 1) {
                ok = false;
                break;
            }
        c.check(tag + " b-image form", ok, "a into <a>, b to a^k b",
                Report::Provenance::brute_force);
    }

    // on small tables, compare the full permutations too
    if (order <= 400) {
        auto perms = brute_force_automorphisms(tbl, Int(400));
        std::vector<std::vector<int>> from_pairs;
        from_pairs.reserve(S.size());
        for (const AutPair& s : S) {
            std::vector<int> perm(order);
            for (int x = 0; x < order; ++x)
                perm[x] = element_index(P, apply(s, element_at(P, x), P));
            from_pairs.push_back(std::move(perm));
        }
        std::sort(perms.begin(), perms.end());
        std::sort(from_pairs.begin(), from_pairs.end());
        c.check(tag + " aut permutations", perms == from_pairs,
                std::to_string(perms.size()) + " permutations",
                Report::Provenance::brute_force);
    }
}

// ----------------------------------------------------------- nearfields

void nearfield_pair_suite(Checker& c, const DicksonParams& P, const VerifyOptions& opt) {
    const std::string tag = pair_tag(P);
    c.cover({"nearfield.gf_build", "nearfield.dickson_nearfield",
             "nearfield.verify_nearfield_axioms", "nearfield.match_presentation",
             "nearfield.nearfield_automorphisms", "nearfield.nearfield_aut_order"});

    const NearfieldTable nf = dickson_nearfield(P, opt.nearfield_table_bound);
    const NearfieldAxiomReport ax = verify_nearfield_axioms(nf);

    bool axioms_ok = ax.nearfield_ok();
    std::string detail;
    if (!axioms_ok) detail = "axiom failure";
    if (P.n >= 2) {
        if (ax.left_distributive) {
            axioms_ok = false;
            detail = "no left-distributivity counterexample";
        } else if (ax.left_failure) {
            const auto [a, b, cc] = *ax.left_failure;
            if (nf.mul_at(a, nf.add_at(b, cc)) ==
                nf.add_at(nf.mul_at(a, b), nf.mul_at(a, cc))) {
                axioms_ok = false;
                detail = "bogus left-dist witness";
            } else if (detail.empty()) {
                detail = "left fails at (" + std::to_string(a) + "," + std::to_string(b) +
                         "," + std::to_string(cc) + ")";
            }
        }
    }
    c.check(tag + " nearfield axioms", axioms_ok, detail, Report::Provenance::brute_force);

    // coupling classes partition the nonzero elements evenly
    {
        std::vector<int> per_class(P.n, 0);
        bool ok = nf.coupling_class[0] == 0;
        for (int x = 1; x < nf.order; ++x) {
            const int j = nf.coupling_class[x];
            if (j < 0 || j >= static_cast<int>(P.n)) ok = false;
            else ++per_class[j];
        }
        for (int j = 0; j < static_cast<int>(P.n); ++j)
            if (Int(per_class[j]) != P.m) ok = false;
        c.check(tag + " coupling classes", ok, "m elements per class",
                Report::Provenance::enumeration);
    }

    // the multiplicative group satisfies the presentation, witnessed by an
    // explicit isomorphism with the presentation table
    {
        const auto [A, B] = match_presentation(nf);
        const FiniteGroupTable g = multiplicative_group(nf);
        const int Ag = A - 1, Bg = B - 1;
        bool ok = element_order(g, Ag) == static_cast<int>(to_ulong(P.m));
        ok = ok && table_power(g, Bg, Int(P.n)) == table_power(g, Ag, P.t);
        ok = ok && g.at(Bg, Ag) == g.at(table_power(g, Ag, P.q), Bg);

        const FiniteGroupTable pres = build_group_table(P, opt.nearfield_table_bound);
        // map a^i b^j -> A^i B^j and check it is a bijective homomorphism
        const int m = static_cast<int>(to_ulong(P.m));
        const int n = static_cast<int>(P.n);
        std::vector<int> iso(pres.order);
        {
            std::vector<int> apow(m), bpow(n);
            apow[0] = g.identity;
            for (int i = 1; i < m; ++i) apow[i] = g.at(apow[i - 1], Ag);
            bpow[0] = g.identity;
            for (int j = 1; j < n; ++j) bpow[j] = g.at(bpow[j - 1], Bg);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) iso[i * n + j] = g.at(apow[i], bpow[j]);
        }
        std::vector<char> seen(g.order, 0);
        for (int x : iso) {
            if (seen[x]) ok = false;
            seen[x] = 1;
        }
        for (int x = 0; x < pres.order && ok; ++x)
            for (int y = 0; y < pres.order; ++y)
                if (iso[pres.at(x, y)] != g.at(iso[x], iso[y])) {
                    ok = false;
                    break;
                }
        c.check(tag + " presentation match", ok,
                "A=" + std::to_string(A) + " B=" + std::to_string(B),
                Report::Provenance::brute_force);
    }

    // nearfield automorphisms: brute count against the order formula
    {
        const auto autos = nearfield_automorphisms(nf, opt.nearfield_table_bound);
        const NearfieldDescriptor desc = NearfieldDescriptor::dickson(P.q, P.n);
        const Int expected = nearfield_aut_order(desc);
        bool ok = Int(autos.size()) == expected;
        // each map really preserves both operations
        for (const auto& theta : autos)
            for (int x = 0; x < nf.order && ok; ++x)
                for (int y = 0; y < nf.order; ++y)
                    if (theta[nf.add_at(x, y)] != nf.add_at(theta[x], theta[y]) ||
                        theta[nf.mul_at(x, y)] != nf.mul_at(theta[x], theta[y])) {
                        ok = false;
                        break;
                    }
        const Int mult = mult_aut_count(desc);
        ok = ok && mult % expected == 0;
        c.check(tag + " nearfield automorphisms", ok,
                dec(Int(autos.size())) + " of " + dec(expected) + " expected, dividing " +
                    dec(mult),
                Report::Provenance::brute_force);
    }
}

void field_suite(Checker& c, const VerifyOptions& opt) {
    c.cover({"catalog.field_counts", "catalog.factor_index", "nearfield.gf_build",
             "nearfield.dickson_nearfield", "nearfield.nearfield_automorphisms",
             "nearfield.nearfield_aut_order", "nearfield.verify_nearfield_axioms"});

    const std::pair<int, unsigned> fields[] = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2},
                                               {3, 2}, {2, 3}, {2, 4}, {5, 2}, {3, 3}};
    for (const auto& [p, l] : fields) {
        const Int q = pow_ui(Int(p), l);
        const std::string tag = "field:" + dec(q);
        const FieldCounts fc = field_counts(Int(p), l);
        bool ok = fc.mult_aut == totient(q - 1) && fc.nf_aut == l &&
                  fc.factor.get_den() == 1;  // integrality of phi(q-1)/l

        const NearfieldDescriptor desc = NearfieldDescriptor::field(q);
        ok = ok && factor_index(desc) == fc.factor.get_num();
        ok = ok && nearfield_aut_order(desc) == l;

        // the trivial nearfield on GF(q): every axiom including left
        // distributivity, and exactly l automorphisms (Frobenius powers)
        if (q <= opt.nearfield_table_bound) {
            const NearfieldTable nf =
                dickson_nearfield(validate_dickson_pair(q, 1), opt.nearfield_table_bound);
            const NearfieldAxiomReport ax = verify_nearfield_axioms(nf);
            ok = ok && ax.nearfield_ok() && ax.left_distributive;
            const auto autos = nearfield_automorphisms(nf, opt.nearfield_table_bound);
            ok = ok && autos.size() == l;
            // Frobenius x -> x^p must be among them
            std::vector<int> frob(nf.order);
            for (int x = 0; x < nf.order; ++x) frob[x] = nf.base.pow(x, Int(p));
            ok = ok && std::find(autos.begin(), autos.end(), frob) != autos.end();
            // and the multiplicative automorphism count matches brute force
            if (q <= 128) {
                FiniteGroupTable mg = multiplicative_group(nf);
                mg.generators = {nf.generator - 1};
                ok = ok && Int(brute_force_generator_images(mg).size()) == fc.mult_aut;
            }
        }
        c.check(tag + " counts", ok,
                "mult=" + dec(fc.mult_aut) + " nf=" + dec(fc.nf_aut) + " factor=" +
                    dec(fc.factor),
                Report::Provenance::formula);
    }
}

void exceptional_suite(Checker& c, const VerifyOptions& opt) {
    c.cover({"catalog.exceptional_table", "catalog.exceptional_group",
             "catalog.factor_index"});

    const auto& table = exceptional_table();
    bool ok = table.size() == 7;
    for (size_t i = 0; i < table.size(); ++i) {
        const auto& r = table[i];
        if (static_cast<size_t>(r.label) != i + 1) ok = false;
        if (r.mult_group_order != r.order - 1) ok = false;
        if (r.factor * r.nf_aut_order != r.group_aut_order) ok = false;
        if (factor_index(NearfieldDescriptor::exceptional(r.label)) != r.factor) ok = false;
    }
    const std::string csv = catalog_csv();
    ok = ok && csv.find("I,25,SL(2,3),4,24,6") != std::string::npos &&
         csv.find("III,49,2O,3,48,16") != std::string::npos &&
         csv.find("VII,3481,SL(2,5) x Z29,1,3360,3360") != std::string::npos;
    c.check("exceptional table", ok, "7 rows, factors consistent",
            Report::Provenance::table);

    // base groups: construct and count automorphisms by brute force
    const ExceptionalLabel base[] = {ExceptionalLabel::I, ExceptionalLabel::III,
                                     ExceptionalLabel::V};
    for (ExceptionalLabel label : base) {
        const auto& rec = exceptional_record(label);
        const FiniteGroupTable g = exceptional_group(label, Int(200));
        const GroupAxiomReport ax = verify_group_axioms(g);
        const size_t count = brute_force_generator_images(g).size();
        bool gok = ax.ok() && g.order == rec.mult_group_order &&
                   Int(count) == rec.group_aut_order;
        if (label == ExceptionalLabel::III) {
            int involutions = 0;
            for (int x = 0; x < g.order; ++x)
                if (x != g.identity && g.at(x, x) == g.identity) ++involutions;
            gok = gok && involutions == 1;
        }
        c.check("exceptional " + to_string(label) + " (" + rec.mult_group_name + ")", gok,
                "|Aut|=" + std::to_string(count), Report::Provenance::brute_force);
    }

    if (opt.slow_suite) {
        const ExceptionalLabel products[] = {ExceptionalLabel::II, ExceptionalLabel::IV,
                                             ExceptionalLabel::VI, ExceptionalLabel::VII};
        for (ExceptionalLabel label : products) {
            const auto& rec = exceptional_record(label);
            const FiniteGroupTable g = exceptional_group(label, Int(4000));
            const GroupAxiomReport ax = verify_group_axioms_sampled(g, g.order / 29 + 1);
            const size_t count = brute_force_generator_images(g).size();
            c.check("exceptional " + to_string(label) + " (" + rec.mult_group_name + ")",
                    ax.ok() && Int(count) == rec.group_aut_order,
                    "|Aut|=" + std::to_string(count), Report::Provenance::brute_force);
        }
    }
}

void nvs_suite(Checker& c) {
    c.cover({"nvs.coset_count", "nvs.count_nvs", "nvs.enumerate_classes",
             "nvs.multiset_oracle", "nvs.nvs_isomorphism_oracle", "numtheory.multichoose",
             "catalog.factor_index"});

    // counting formula against the raw-sequence oracle on the full grid
    bool ok = true;
    std::string detail;
    for (unsigned k = 1; k <= 8 && ok; ++k)
        for (unsigned dim = 1; dim <= 8 && ok; ++dim)
            if (multiset_oracle(k, dim) != multichoose(Int(k), dim - 1)) {
                ok = false;
                detail = "k=" + std::to_string(k) + " dim=" + std::to_string(dim);
            }
    ok = ok && multiset_oracle(12, 2) == 12;
    c.check("nvs multiset grid", ok, detail, Report::Provenance::enumeration);

    // descriptor-level counts
    {
        const NearfieldDescriptor gf2 = NearfieldDescriptor::field(Int(2));
        const NearfieldDescriptor gf5 = NearfieldDescriptor::field(Int(5));
        const NearfieldDescriptor df52 = NearfieldDescriptor::dickson(Int(5), 2);
        const NearfieldDescriptor exc1 = NearfieldDescriptor::exceptional(ExceptionalLabel::I);
        ok = coset_count(gf2) == 1 && coset_count(gf5) == 2 && coset_count(df52) == 12 &&
             coset_count(exc1) == 6;
        ok = ok && count_nvs(gf2, 7) == 1 && count_nvs(gf5, 2) == 2 &&
             count_nvs(df52, 2) == 12 && count_nvs(exc1, 3) == 21;
        for (const auto& d : {gf2, gf5, df52, exc1}) ok = ok && count_nvs(d, 1) == 1;
        // monotonicity in dim once k >= 2
        for (unsigned dim = 1; dim <= 4; ++dim)
            ok = ok && count_nvs(gf5, dim + 1) > count_nvs(gf5, dim);

        const auto classes = enumerate_classes(gf5, 2, Int(100));
        ok = ok && classes.size() == 2 && classes[0] == std::vector<unsigned long>{1, 1} &&
             classes[1] == std::vector<unsigned long>{1, 2};
        const auto classes3 = enumerate_classes(exc1, 3, Int(100));
        ok = ok && Int(classes3.size()) == count_nvs(exc1, 3);
        for (const auto& seq : classes3)
            ok = ok && seq.front() == 1 && std::is_sorted(seq.begin(), seq.end());
        c.check("nvs counts", ok, "", Report::Provenance::formula);
    }

    // deep oracle over prime fields
    {
        ok = true;
        for (int p : {2, 3, 5})
            for (unsigned dim : {1u, 2u}) {
                const Int direct = nvs_isomorphism_oracle(p, dim);
                if (direct != count_nvs(NearfieldDescriptor::field(Int(p)), dim)) ok = false;
            }
        ok = ok && nvs_isomorphism_oracle(2, 2) == 1 && nvs_isomorphism_oracle(3, 2) == 1 &&
             nvs_isomorphism_oracle(5, 2) == 2;
        c.check("nvs isomorphism oracle", ok, "GF(p) scalar-orbit search",
                Report::Provenance::brute_force);
    }

    // the alternative binomial reading C(dim+k-2, dim) breaks at k=1; the
    // multichoose reading is the one the oracles support
    {
        ok = true;
        for (unsigned dim = 1; dim <= 5; ++dim) {
            if (multichoose(Int(1), dim - 1) != 1) ok = false;
            if (binomial(Int(dim + 1 - 2), dim) != 0) ok = false;
        }
        c.check("nvs multichoose reading", ok, "k=1 gives 1, alternative binomial gives 0",
                Report::Provenance::formula);
        c.out.report.warn(
            "nvs count uses multichoose(k, dim-1) = C(dim+k-2, dim-1); the alternative "
            "C(dim+k-2, dim) reading yields 0 at k=1 and is rejected by the oracles");
    }
}

}  // namespace

const std::vector<std::string>& verifiable_operations() { return kOperations; }

VerifyOutcome run_verify(const VerifyOptions& opt) {
    Checker c;
    c.out.report.command = "verify";
    c.out.report.add_input("max_order", dec(opt.max_order));
    c.out.report.add_input("suite", opt.slow_suite ? "slow" : "core");
    c.out.report.add_input("group_table_bound", dec(opt.group_table_bound));
    c.out.report.add_input("nearfield_table_bound", dec(opt.nearfield_table_bound));

    numtheory_suite(c);
    rejection_suite(c);

    const auto pairs = scan_pairs(opt.max_order);
    c.out.report.add_result("pair count", Int(pairs.size()), Report::Provenance::formula);
    for (const DicksonParams& P : pairs) {
        pair_params_suite(c, P);
        pair_relations_suite(c, P);
        pair_congruence_suite(c, P, Int(2000000));
        if (P.group_order() <= opt.group_table_bound) pair_table_suite(c, P, opt);
        if (pow_ui(P.q, P.n) <= opt.nearfield_table_bound) nearfield_pair_suite(c, P, opt);
    }

    field_suite(c, opt);
    exceptional_suite(c, opt);
    nvs_suite(c);

    // coverage: every operation exercised at least once
    {
        std::string missing;
        for (const std::string& op : kOperations)
            if (!c.covered.count(op)) missing += (missing.empty() ? "" : " ") + op;
        c.check("operation coverage", missing.empty(),
                missing.empty() ? std::to_string(kOperations.size()) + " operations"
                                : missing,
                Report::Provenance::enumeration);
    }

    c.out.report.add_result("summary checks", Int(c.out.checks),
                            Report::Provenance::enumeration);
    c.out.report.add_result("summary failures", Int(c.out.failures),
                            Report::Provenance::enumeration);
    c.out.report.add_result("summary expected_discrepancies",
                            Int(c.out.expected_discrepancies),
                            Report::Provenance::enumeration);
    c.out.report.add_result("verdict", c.out.failures ? "FAIL" : "pass",
                            Report::Provenance::enumeration);
    return c.out;
}

}  // namespace nfk
