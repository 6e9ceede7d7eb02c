#pragma once

#include "report.hpp"
#include "spec_file.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tca::cli {

struct Options {
    std::string command;
    std::string spec_path;
    std::string builtin;
    unsigned m = 2;
    std::string point;              // isotropy: index (1-based) or label
    std::vector<std::string> at;    // evaluate/classify: "P:LABEL"
    std::string lambda;             // comma-separated scalars
    std::size_t support_bound = 2;
};

/// The spec file, or the named builtin when no file is given.
SpecDocument load_document(const Options& opt);

/// Runs one of verify, fixed, orbits, isotropy, cocycle, identities,
/// evaluate, classify. InputError and CheckFailure propagate.
Report run_command(const Options& opt, const SpecDocument& doc);

} // namespace tca::cli
