#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nfk/ints.hpp"

namespace nfk {

// Uniform result object for the CLI. Everything is exact decimal text and
// everything keeps insertion order, so serialized output is byte-stable
// across runs.
struct Report {
    enum class Provenance { formula, enumeration, brute_force, table };
    static const char* provenance_name(Provenance p);

    struct Entry {
        std::string key;
        std::string value;
        Provenance provenance;
    };

    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Entry> results;
    std::vector<std::string> warnings;

    void add_input(const std::string& key, const std::string& value) {
        inputs.emplace_back(key, value);
    }
    void add_result(const std::string& key, const std::string& value, Provenance p) {
        results.push_back({key, value, p});
    }
    void add_result(const std::string& key, const Int& value, Provenance p) {
        results.push_back({key, dec(value), p});
    }
    void warn(const std::string& message) { warnings.push_back(message); }

    std::string to_text() const;
    std::string to_json() const;
};

}  // namespace nfk
