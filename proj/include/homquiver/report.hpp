#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace homquiver {

// Structured command result. The machine form round-trips through JSON; the
// human form is a plain-text rendering of the same data.
struct Report {
    std::vector<std::string> command;
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    std::vector<std::string> notes;
    std::map<std::string, std::string> statuses;
    int exit_code = 0;

    bool operator==(const Report& o) const;
};

nlohmann::ordered_json report_to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string render_machine(const Report& r);  // canonical JSON text
std::string render_human(const Report& r);

}  // namespace homquiver
