#pragma once

#include <string>
#include <variant>

#include "nfk/dickson.hpp"

namespace nfk {

// The seven nearfields that are neither fields nor twisted fields,
// conventionally numbered I..VII.
enum class ExceptionalLabel { I = 1, II, III, IV, V, VI, VII };

std::string to_string(ExceptionalLabel label);
ExceptionalLabel parse_exceptional_label(const std::string& s);

struct FieldDesc {
    Int p;
    unsigned l = 1;

    Int order() const { return pow_ui(p, l); }
};

// Tagged union over the trichotomy: field(p,l) | dickson(q,n) |
// exceptional(I..VII). A dickson descriptor with n = 1 normalizes to the
// field variant.
struct NearfieldDescriptor {
    std::variant<FieldDesc, DicksonParams, ExceptionalLabel> v;

    static NearfieldDescriptor field(const Int& q);  // q any prime power
    static NearfieldDescriptor dickson(const Int& q, unsigned n);
    static NearfieldDescriptor exceptional(ExceptionalLabel label);

    bool is_field() const { return std::holds_alternative<FieldDesc>(v); }
    bool is_dickson() const { return std::holds_alternative<DicksonParams>(v); }
    bool is_exceptional() const { return std::holds_alternative<ExceptionalLabel>(v); }

    const FieldDesc& as_field() const { return std::get<FieldDesc>(v); }
    const DicksonParams& as_dickson() const { return std::get<DicksonParams>(v); }
    ExceptionalLabel as_exceptional() const { return std::get<ExceptionalLabel>(v); }

    /// "field:9" | "dickson:5,2" | "exceptional:IV"
    std::string spec_string() const;
};

/// Parses the spec-string forms accepted by the CLI.
NearfieldDescriptor parse_descriptor(const std::string& spec);

}  // namespace nfk
