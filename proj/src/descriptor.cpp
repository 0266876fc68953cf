#include "nfk/descriptor.hpp"

#include <array>

#include "nfk/errors.hpp"

namespace nfk {

namespace {

constexpr std::array<const char*, 7> kRoman = {"I", "II", "III", "IV", "V", "VI", "VII"};

}  // namespace

std::string to_string(ExceptionalLabel label) {
    return kRoman[static_cast<int>(label) - 1];
}

ExceptionalLabel parse_exceptional_label(const std::string& s) {
    for (size_t i = 0; i < kRoman.size(); ++i)
        if (s == kRoman[i]) return static_cast<ExceptionalLabel>(i + 1);
    throw invalid_input("unknown exceptional label '" + s + "' (expected I..VII)");
}

NearfieldDescriptor NearfieldDescriptor::field(const Int& q) {
    const PrimePower pp = is_prime_power(q);
    return {FieldDesc{pp.prime, pp.exponent}};
}

NearfieldDescriptor NearfieldDescriptor::dickson(const Int& q, unsigned n) {
    if (n == 1) return field(q);  // degenerate pair is the field itself
    return {validate_dickson_pair(q, n)};
}

NearfieldDescriptor NearfieldDescriptor::exceptional(ExceptionalLabel label) {
    return {label};
}

std::string NearfieldDescriptor::spec_string() const {
    if (is_field()) return "field:" + dec(as_field().order());
    if (is_dickson())
        return "dickson:" + dec(as_dickson().q) + "," + std::to_string(as_dickson().n);
    return "exceptional:" + to_string(as_exceptional());
}

NearfieldDescriptor parse_descriptor(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw invalid_input("bad nearfield spec '" + spec +
                            "' (expected field:q | dickson:q,n | exceptional:I..VII)");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    auto parse_int = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_input("bad number '" + s + "' in nearfield spec '" + spec + "'");
        return Int(s);
    };

    if (kind == "field") return NearfieldDescriptor::field(parse_int(rest));
    if (kind == "dickson") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw invalid_input("bad dickson spec '" + spec + "' (expected dickson:q,n)");
        const Int q = parse_int(rest.substr(0, comma));
        const Int n = parse_int(rest.substr(comma + 1));
        if (n < 1 || !fits_ulong(n) || to_ulong(n) > 1u << 20)
            throw invalid_input("bad dickson spec '" + spec + "': n out of range");
        return NearfieldDescriptor::dickson(q, static_cast<unsigned>(to_ulong(n)));
    }
    if (kind == "exceptional")
        return NearfieldDescriptor::exceptional(parse_exceptional_label(rest));
    throw invalid_input("unknown nearfield kind '" + kind + "' in spec '" + spec + "'");
}

}  // namespace nfk
