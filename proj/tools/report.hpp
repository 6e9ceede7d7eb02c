#pragma once

#include <string>
#include <vector>

namespace tca::cli {

/// A value is either one line or a list of lines.
struct Entry {
    std::string key;
    std::string value;
    std::vector<std::string> items;
    bool is_list = false;

    bool operator==(const Entry&) const = default;
};

struct ReportSection {
    std::string title;
    std::vector<Entry> entries;

    ReportSection& add(std::string key, std::string value);
    ReportSection& add_list(std::string key, std::vector<std::string> items);
    bool operator==(const ReportSection&) const = default;
};

struct Report {
    std::string command;
    std::string subject;
    std::string summary;
    int status = 0; // 0 ok, 1 check failed, 2 user error
    std::vector<ReportSection> sections;

    ReportSection& section(std::string title);
    bool operator==(const Report&) const = default;
};

std::string emit_text(const Report& r);
std::string emit_json(const Report& r);
/// Inverse of emit_json; throws InputError on malformed documents.
Report report_from_json(const std::string& text);

} // namespace tca::cli
