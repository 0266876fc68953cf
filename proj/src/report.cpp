#include "nfk/report.hpp"

#include <json.hpp>

namespace nfk {

const char* Report::provenance_name(Provenance p) {
    switch (p) {
        case Provenance::formula: return "formula";
        case Provenance::enumeration: return "enumeration";
        case Provenance::brute_force: return "brute-force";
        case Provenance::table: return "table";
    }
    return "?";
}

std::string Report::to_text() const {
    std::string out = "command: " + command + "\n";
    for (const auto& [k, v] : inputs) out += "input " + k + ": " + v + "\n";
    for (const auto& e : results)
        out += e.key + ": " + e.value + " [" + provenance_name(e.provenance) + "]\n";
    for (const auto& w : warnings) out += "warning: " + w + "\n";
    return out;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    j["inputs"] = in;
    nlohmann::ordered_json res = nlohmann::ordered_json::object();
    nlohmann::ordered_json prov = nlohmann::ordered_json::object();
    for (const auto& e : results) {
        res[e.key] = e.value;
        prov[e.key] = provenance_name(e.provenance);
    }
    j["results"] = res;
    j["provenance"] = prov;
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

}  // namespace nfk
