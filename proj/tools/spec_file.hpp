#pragma once

#include "tca/twistact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tca::cli {

struct SpecCatalogEntry {
    std::size_t point; // 0-based
    std::string label;
    std::vector<Matrix> matrices; // one per basis element of g^M
};

struct SpecComponent {
    std::size_t point; // 0-based
    std::string label;
};

struct SpecModule {
    std::optional<Vec> lambda;
    std::vector<SpecComponent> components;
};

struct SpecRepresentation {
    std::string label;
    std::vector<Matrix> matrices; // one per basis element of L
};

struct SpecDocument {
    std::string name;
    ActionPtr action;
    std::vector<SpecCatalogEntry> catalog;
    std::optional<SpecModule> module;
    std::optional<SpecRepresentation> representation;
};

/// Parses and validates a spec document. Syntax errors report line and
/// column; semantic errors report the field path. The conductor falls back to
/// default_conductor when the document has no field entry.
SpecDocument parse_spec(const std::string& text, unsigned default_conductor = 1);

/// Conductor from the TCA_CONDUCTOR environment variable, else 1.
unsigned conductor_from_environment();

/// The spec document for an action, accepted back by parse_spec.
std::string spec_text(const TwistedAction& act, const std::string& name);

/// "klein", "swap" or "onsager" (with m).
ActionPtr builtin_action(const std::string& name, unsigned m);

} // namespace tca::cli
