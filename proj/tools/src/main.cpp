#include "orbhodge_cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char **argv) {
    using namespace orbhodge::cli;
    CLI::App app{"Exact checks for Hodge structures on orbifold cohomology and toric hypersurfaces", "orbhodge"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App *sub, bool with_file) {
        if (with_file) sub->add_option("file", opt.file, "input JSON file")->required();
        sub->add_flag("--json", opt.json, "emit the report as JSON");
        sub->add_flag("--timing", opt.timing, "include wall-clock time");
    };
    add_common(app.add_subcommand("dual", "polar dual of a polytope"), true);
    add_common(app.add_subcommand("hlc", "hard Lefschetz condition for an anticanonical hypersurface"), true);
    add_common(app.add_subcommand("check-hs", "Hodge structure axioms and polarization"), true);
    for (const char *name : {"check-pmhs", "check-orbifold", "orbit"}) {
        CLI::App *sub = app.add_subcommand(name, std::string(name) == "orbit"       ? "nilpotent orbit positivity"
                                                 : std::string(name) == "check-pmhs" ? "polarized mixed Hodge structure"
                                                                                     : "orbifold Hodge package");
        add_common(sub, true);
        sub->add_option("--coeffs", opt.coeffs, "Kaehler class coefficients (rationals)");
        if (std::string(name) == "orbit") sub->add_option("--samples", opt.samples, "sample points, coordinates comma-separated");
    }
    CLI::App *age = app.add_subcommand("age", "age of a diagonal group element");
    add_common(age, false);
    age->add_option("--order", opt.order, "order m_g of the element")->required();
    age->add_option("--exponents", opt.exponents, "exponents m_j")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_invalid_input;
    }
    return run_command(app.get_subcommands().front()->get_name(), opt, std::cout, std::cerr);
}
