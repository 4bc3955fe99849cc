#include <iostream>

#include "CLI11.hpp"
#include "transurf/cli.hpp"

using namespace transurf;

int main(int argc, char **argv) {
    CLI::App app{"Implicit equations of translational surfaces"};
    app.require_subcommand(1);

    JobConfig config;
    std::string method = "auto", format = "text";
    unsigned samples = 25;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("job", config.input_path, "JSON job file")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--method", method, "Elimination path")
            ->check(CLI::IsMember({"auto", "general", "ruled", "planar"}));
    };

    auto *imp = app.add_subcommand("implicitize", "Compute the implicit equation");
    add_common(imp);
    auto *verify = imp->add_option("--verify", samples, "Random points checked after the symbolic test");
    imp->add_option("--seed", config.seed, "Seed for the verification points");
    imp->add_flag("--intermediates", config.show_intermediates, "Print all intermediate results");
    imp->add_flag("--basepoints", config.run_basepoint_diagnostic, "Run the numerical basepoint diagnostic");
    imp->add_option("--tol", config.tol, "Tolerance of the basepoint diagnostic")->check(CLI::PositiveNumber);

    auto *check = app.add_subcommand("check", "Validate the job file and report the chosen method");
    add_common(check);
    auto *mub = app.add_subcommand("mubasis", "Print the mu-bases of both curves");
    add_common(mub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    if (imp->parsed()) config.command = Command::implicitize;
    else if (check->parsed()) config.command = Command::check;
    else config.command = Command::mubasis;
    config.format = format == "json" ? OutputFormat::json : format == "latex" ? OutputFormat::latex : OutputFormat::text;
    bool method_given = false;
    for (auto *sub : {imp, check, mub})
        if (sub->parsed() && sub->count("--method") > 0) method_given = true;
    if (method_given) config.method = method_from_name(method);
    if (verify->count() > 0) config.verify_samples = samples;

    return run(config, std::cout, std::cerr);
}
