#include "nfk/catalog.hpp"

#include <map>

#include <json.hpp>

#include "nfk/automorphism.hpp"
#include "nfk/errors.hpp"

namespace nfk {

namespace {

// Preference bound for counting by explicit enumeration of the solution
// set; above it the closed count from the unit-density argument is used
// (the two agree everywhere the verifier can check).
const Int kEnumerationPreferenceBound = 3000;

const std::array<ExceptionalRecord, 7> kExceptional = {{
    {ExceptionalLabel::I, 25, "SL(2,3)", 24, "S4", 4, 24, 6},
    {ExceptionalLabel::II, 121, "SL(2,3) x Z5", 120, "S4 x Z4", 2, 96, 48},
    {ExceptionalLabel::III, 49, "2O", 48, "S4 x Z2", 3, 48, 16},
    {ExceptionalLabel::IV, 529, "2O x Z11", 528, "S4 x Z2 x Z10", 1, 480, 480},
    {ExceptionalLabel::V, 121, "SL(2,5)", 120, "S5", 5, 120, 24},
    {ExceptionalLabel::VI, 841, "SL(2,5) x Z7", 840, "S5 x Z6", 2, 720, 360},
    {ExceptionalLabel::VII, 3481, "SL(2,5) x Z29", 3480, "S5 x Z28", 1, 3360, 3360},
}};

}  // namespace

const std::array<ExceptionalRecord, 7>& exceptional_table() { return kExceptional; }

const ExceptionalRecord& exceptional_record(ExceptionalLabel label) {
    return kExceptional[static_cast<int>(label) - 1];
}

FiniteGroupTable special_linear_2(int p, const Int& max_order) {
    if (p < 2 || !is_prime(Int(p))) throw invalid_input("special_linear_2: p must be prime");

    std::vector<std::array<int, 4>> elems;
    std::map<std::array<int, 4>, int> index;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) {
                        index[{a, b, c, d}] = static_cast<int>(elems.size());
                        elems.push_back({a, b, c, d});
                    }

    FiniteGroupTable g;
    g.order = static_cast<int>(elems.size());
    if (Int(g.order) > max_order)
        throw bound_exceeded("special_linear_2: order " + std::to_string(g.order) +
                             " exceeds bound " + dec(max_order));
    g.identity = index.at({1, 0, 0, 1});
    g.mul.resize(static_cast<size_t>(g.order) * g.order);
    for (int x = 0; x < g.order; ++x) {
        const auto& [a, b, c, d] = elems[x];
        for (int y = 0; y < g.order; ++y) {
            const auto& [e, f, gg, h] = elems[y];
            g.set(x, y,
                  index.at({(a * e + b * gg) % p, (a * f + b * h) % p,
                            (c * e + d * gg) % p, (c * f + d * h) % p}));
        }
    }
    g.generators = {index.at({1, 1, 0, 1}), index.at({1, 0, 1, 1})};
    return g;
}

namespace {

// One quaternion coordinate (a + b*sqrt2)/2 with integer a, b.
struct HalfCoord {
    int a = 0;
    int b = 0;
    auto operator<=>(const HalfCoord&) const = default;
};

using Quat = std::array<HalfCoord, 4>;

Quat quat_mul(const Quat& u, const Quat& v) {
    // component products accumulate in quarters: (A + B*sqrt2)/4
    long A[4] = {0, 0, 0, 0}, B[4] = {0, 0, 0, 0};
    auto acc = [&](int target, int sign, const HalfCoord& x, const HalfCoord& y) {
        A[target] += sign * (long(x.a) * y.a + 2L * x.b * y.b);
        B[target] += sign * (long(x.a) * y.b + long(x.b) * y.a);
    };
    const HalfCoord &w1 = u[0], &x1 = u[1], &y1 = u[2], &z1 = u[3];
    const HalfCoord &w2 = v[0], &x2 = v[1], &y2 = v[2], &z2 = v[3];
    acc(0, 1, w1, w2); acc(0, -1, x1, x2); acc(0, -1, y1, y2); acc(0, -1, z1, z2);
    acc(1, 1, w1, x2); acc(1, 1, x1, w2);  acc(1, 1, y1, z2);  acc(1, -1, z1, y2);
    acc(2, 1, w1, y2); acc(2, -1, x1, z2); acc(2, 1, y1, w2);  acc(2, 1, z1, x2);
    acc(3, 1, w1, z2); acc(3, 1, x1, y2);  acc(3, -1, y1, x2); acc(3, 1, z1, w2);

    Quat out;
    for (int i = 0; i < 4; ++i) {
        if (A[i] % 2 || B[i] % 2)
            throw internal_error("binary octahedral group: product left the half lattice");
        out[i] = {static_cast<int>(A[i] / 2), static_cast<int>(B[i] / 2)};
    }
    return out;
}

}  // namespace

FiniteGroupTable binary_octahedral_group() {
    const Quat one = {{{2, 0}, {0, 0}, {0, 0}, {0, 0}}};
    const Quat omega = {{{1, 0}, {1, 0}, {1, 0}, {1, 0}}};   // (1+i+j+k)/2
    const Quat s = {{{0, 1}, {0, 1}, {0, 0}, {0, 0}}};       // (1+i)/sqrt2

    std::vector<Quat> elems{one};
    std::map<Quat, int> index{{one, 0}};
    const std::array<Quat, 2> gens = {omega, s};
    for (size_t head = 0; head < elems.size(); ++head)
        for (const Quat& g : gens) {
            const Quat prod = quat_mul(elems[head], g);
            if (!index.count(prod)) {
                index[prod] = static_cast<int>(elems.size());
                elems.push_back(prod);
            }
        }
    if (elems.size() != 48)
        throw internal_error("binary octahedral group: closure has " +
                             std::to_string(elems.size()) + " elements, expected 48");

    FiniteGroupTable g;
    g.order = 48;
    g.identity = 0;
    g.mul.resize(48 * 48);
    for (int x = 0; x < 48; ++x)
        for (int y = 0; y < 48; ++y) g.set(x, y, index.at(quat_mul(elems[x], elems[y])));
    g.generators = {index.at(omega), index.at(s)};
    return g;
}

FiniteGroupTable exceptional_group(ExceptionalLabel label, const Int& max_order) {
    const ExceptionalRecord& rec = exceptional_record(label);
    if (Int(rec.mult_group_order) > max_order)
        throw bound_exceeded("exceptional_group " + to_string(label) + ": order " +
                             std::to_string(rec.mult_group_order) + " exceeds bound " +
                             dec(max_order));
    switch (label) {
        case ExceptionalLabel::I: return special_linear_2(3, max_order);
        case ExceptionalLabel::II:
            return direct_product(special_linear_2(3, max_order), cyclic_group(5));
        case ExceptionalLabel::III: return binary_octahedral_group();
        case ExceptionalLabel::IV:
            return direct_product(binary_octahedral_group(), cyclic_group(11));
        case ExceptionalLabel::V: return special_linear_2(5, max_order);
        case ExceptionalLabel::VI:
            return direct_product(special_linear_2(5, max_order), cyclic_group(7));
        case ExceptionalLabel::VII:
            return direct_product(special_linear_2(5, max_order), cyclic_group(29));
    }
    throw invalid_input("exceptional_group: bad label");
}

FieldCounts field_counts(const Int& p, unsigned l) {
    FieldCounts c;
    c.mult_aut = totient(pow_ui(p, l) - 1);
    c.nf_aut = l;
    c.factor = Rat(c.mult_aut, c.nf_aut);
    c.factor.canonicalize();
    return c;
}

Int mult_aut_count(const NearfieldDescriptor& N) {
    if (N.is_field()) return field_counts(N.as_field().p, N.as_field().l).mult_aut;
    if (N.is_exceptional()) return exceptional_record(N.as_exceptional()).group_aut_order;

    const DicksonParams& P = N.as_dickson();
    if (P.is_quaternion_exception()) {
        // the congruence characterization excludes (3,2); count its
        // automorphisms on the explicit table
        const FiniteGroupTable g = build_group_table(P, Int(8));
        return Int(brute_force_generator_images(g).size());
    }
    if (P.group_order() <= kEnumerationPreferenceBound)
        return Int(enumerate_S(P, kEnumerationPreferenceBound * kEnumerationPreferenceBound)
                       .size());
    return aut_count_corrho(P);
}

Int nearfield_aut_order(const NearfieldDescriptor& N) {
    if (N.is_field()) return Int(N.as_field().l);
    if (N.is_exceptional()) return exceptional_record(N.as_exceptional()).nf_aut_order;

    const DicksonParams& P = N.as_dickson();
    if (P.is_quaternion_exception()) return 6;
    const unsigned ln = P.l * P.n;
    if (ln % P.p_order_mod_n != 0)
        throw internal_error("nearfield_aut_order: l*n not divisible by ord_n(p) for " +
                             N.spec_string());
    return Int(ln / P.p_order_mod_n);
}

Int factor_index(const NearfieldDescriptor& N) {
    const Int mult = mult_aut_count(N);
    const Int nf = nearfield_aut_order(N);
    if (mult % nf != 0)
        throw internal_error("non-integer index for " + N.spec_string() + " (counts: " +
                             dec(mult) + " / " + dec(nf) + ")");
    return mult / nf;
}

std::string catalog_csv() {
    std::string out = "label,order,mult_group,nf_aut,group_aut,factor\n";
    for (const auto& r : kExceptional) {
        out += to_string(r.label) + "," + std::to_string(r.order) + "," +
               r.mult_group_name + "," + std::to_string(r.nf_aut_order) + "," +
               std::to_string(r.group_aut_order) + "," + std::to_string(r.factor) + "\n";
    }
    return out;
}

std::string catalog_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : kExceptional) {
        nlohmann::ordered_json row;
        row["label"] = to_string(r.label);
        row["order"] = r.order;
        row["mult_group"] = r.mult_group_name;
        row["mult_group_order"] = r.mult_group_order;
        row["group_aut_name"] = r.group_aut_name;
        row["nf_aut"] = r.nf_aut_order;
        row["group_aut"] = r.group_aut_order;
        row["factor"] = r.factor;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

}  // namespace nfk
