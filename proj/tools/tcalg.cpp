#include "commands.hpp"

#include "tca/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_input_options(CLI::App* sub, tca::cli::Options& opt)
{
    sub->add_option("spec", opt.spec_path, "Spec file (JSON)");
    sub->add_option("--builtin", opt.builtin, "Builtin example instead of a spec file")
        ->check(CLI::IsMember({"klein", "swap", "onsager"}));
    sub->add_option("--m", opt.m, "Truncation parameter for the onsager builtin");
}

void add_module_options(CLI::App* sub, tca::cli::Options& opt)
{
    sub->add_option("--at", opt.at, "Component POINT:LABEL, e.g. 1:V(2) or 2:chi(1)");
    sub->add_option("--lambda", opt.lambda, "Character on L as comma-separated coordinates");
}

} // namespace

int main(int argc, char** argv)
{
    tca::cli::Options opt;
    std::string format = "text";
    std::string example_name;

    CLI::App app{"Twisted current algebras: fixed points, isotropy, cocycles and evaluation modules"};
    app.require_subcommand(1);
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    const std::vector<std::pair<std::string, std::string>> commands{
        {"verify", "Validate the action"},
        {"fixed", "Fixed-point algebra L and invariants R"},
        {"orbits", "Orbits, stabilizers and R"},
        {"isotropy", "Isotropy group and algebra at a point"},
        {"cocycle", "The cocycle u and its laws"},
        {"identities", "Run the full identity suite"},
        {"evaluate", "Build an evaluation module"},
        {"classify", "Classify an irreducible module of L"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_input_options(sub, opt);
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
        if (name == "isotropy") {
            sub->add_option("--point", opt.point, "Point index (1-based) or label")->required();
        }
        if (name == "evaluate" || name == "classify") {
            add_module_options(sub, opt);
        }
        if (name == "classify") {
            sub->add_option("--support-bound", opt.support_bound, "Largest number of support orbits searched");
        }
    }
    CLI::App* example = app.add_subcommand("example", "Print a builtin spec");
    example->add_option("--name", example_name, "klein, swap or onsager")
        ->required()
        ->check(CLI::IsMember({"klein", "swap", "onsager"}));
    example->add_option("--m", opt.m, "Truncation parameter for onsager");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (example->parsed()) {
            const auto act = tca::cli::builtin_action(example_name, opt.m);
            std::cout << tca::cli::spec_text(*act, example_name);
            return 0;
        }
        opt.command = app.get_subcommands().front()->get_name();
        const tca::cli::SpecDocument doc = tca::cli::load_document(opt);
        const tca::cli::Report r = tca::cli::run_command(opt, doc);
        std::cout << (format == "json" ? tca::cli::emit_json(r) : tca::cli::emit_text(r));
        return r.status;
    } catch (const tca::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tca::CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
