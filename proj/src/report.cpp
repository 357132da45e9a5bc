#include "homquiver/report.hpp"

#include <sstream>

namespace homquiver {

using nlohmann::ordered_json;

bool Report::operator==(const Report& o) const {
    return command == o.command && results == o.results && notes == o.notes &&
           statuses == o.statuses && exit_code == o.exit_code;
}

ordered_json report_to_json(const Report& r) {
    ordered_json j;
    j["command"] = r.command;
    j["results"] = r.results;
    j["notes"] = r.notes;
    j["statuses"] = r.statuses;
    j["exit_code"] = r.exit_code;
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.command = j.at("command").get<std::vector<std::string>>();
    r.results = j.at("results");
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.statuses = j.at("statuses").get<std::map<std::string, std::string>>();
    r.exit_code = j.at("exit_code").get<int>();
    return r;
}

std::string render_machine(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

namespace {

void render_value(std::ostringstream& out, const ordered_json& v, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_primitive()) {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            } else if (it.value().is_array() && !it.value().empty() && it.value()[0].is_primitive()) {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            } else {
                out << pad << it.key() << ":\n";
                render_value(out, it.value(), indent + 2);
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_primitive()) out << pad << "- " << item.dump() << "\n";
            else {
                out << pad << "-\n";
                render_value(out, item, indent + 2);
            }
        }
    } else {
        out << pad << v.dump() << "\n";
    }
}

}  // namespace

std::string render_human(const Report& r) {
    std::ostringstream out;
    out << "command:";
    for (const std::string& c : r.command) out << " " << c;
    out << "\n";
    render_value(out, r.results, 0);
    for (auto& [k, v] : r.statuses) out << "status " << k << ": " << v << "\n";
    for (const std::string& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

}  // namespace homquiver
