#include "aqrook/report_json.hpp"

#include <json.hpp>

namespace aqrook {

std::string report_to_json(const VerificationReport& report, int indent) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = params;
    j["holds"] = report.holds;
    j["elapsed_ms"] = report.elapsed_ms;
    if (report.witness)
        j["witness"] = {{"lhs", report.witness->first}, {"rhs", report.witness->second}};
    return j.dump(indent);
}

VerificationReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VerificationReport report;
    report.identity = j.at("identity").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
        report.params.emplace_back(key, value.get<std::string>());
    report.holds = j.at("holds").get<bool>();
    report.elapsed_ms = j.at("elapsed_ms").get<double>();
    if (j.contains("witness"))
        report.witness = {{j["witness"].at("lhs").get<std::string>(),
                           j["witness"].at("rhs").get<std::string>()}};
    return report;
}

}  // namespace aqrook
