#include "report.hpp"

#include "tca/errors.hpp"

#include <json.hpp>

namespace tca::cli {

using nlohmann::ordered_json;

ReportSection& ReportSection::add(std::string key, std::string value)
{
    entries.push_back({std::move(key), std::move(value), {}, false});
    return *this;
}

ReportSection& ReportSection::add_list(std::string key, std::vector<std::string> items)
{
    entries.push_back({std::move(key), {}, std::move(items), true});
    return *this;
}

ReportSection& Report::section(std::string title)
{
    sections.push_back({std::move(title), {}});
    return sections.back();
}

std::string emit_text(const Report& r)
{
    std::string out;
    if (!r.command.empty()) {
        out += "tcalg " + r.command + (r.subject.empty() ? "" : ": " + r.subject) + "\n";
    }
    if (!r.summary.empty()) {
        out += r.summary + "\n";
    }
    for (const auto& s : r.sections) {
        out += "\n[" + s.title + "]\n";
        for (const auto& e : s.entries) {
            if (!e.is_list) {
                out += e.key + ": " + e.value + "\n";
                continue;
            }
            out += e.key + ":" + (e.items.empty() ? " (none)" : "") + "\n";
            for (const auto& item : e.items) {
                out += "  " + item + "\n";
            }
        }
    }
    return out;
}

std::string emit_json(const Report& r)
{
    ordered_json j;
    j["command"] = r.command;
    j["subject"] = r.subject;
    j["summary"] = r.summary;
    j["status"] = r.status;
    j["sections"] = ordered_json::array();
    for (const auto& s : r.sections) {
        ordered_json js;
        js["title"] = s.title;
        js["entries"] = ordered_json::array();
        for (const auto& e : s.entries) {
            ordered_json je;
            je["key"] = e.key;
            if (e.is_list) {
                je["items"] = e.items;
            } else {
                je["value"] = e.value;
            }
            js["entries"].push_back(std::move(je));
        }
        j["sections"].push_back(std::move(js));
    }
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text)
{
    try {
        const auto j = ordered_json::parse(text);
        Report r;
        r.command = j.at("command").get<std::string>();
        r.subject = j.at("subject").get<std::string>();
        r.summary = j.at("summary").get<std::string>();
        r.status = j.at("status").get<int>();
        for (const auto& js : j.at("sections")) {
            ReportSection s{js.at("title").get<std::string>(), {}};
            for (const auto& je : js.at("entries")) {
                if (je.contains("items")) {
                    s.add_list(je.at("key").get<std::string>(), je.at("items").get<std::vector<std::string>>());
                } else {
                    s.add(je.at("key").get<std::string>(), je.at("value").get<std::string>());
                }
            }
            r.sections.push_back(std::move(s));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report: ") + e.what());
    }
}

} // namespace tca::cli
