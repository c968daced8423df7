#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solbrace/pipeline.hpp"

namespace {

bool is_json_path(const std::string& spec) {
    return spec.size() > 5 &&
           spec.compare(spec.size() - 5, 5, ".json") == 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace solbrace;

    CLI::App app{
        "constructs and verifies brace structures on finite soluble groups"};
    app.require_subcommand(1);

    std::string spec;
    std::string method = "auto";
    std::uint64_t seed = 0;
    int max_order = 512;
    bool json_out = false;

    const std::string method_help =
        "auto, q8free, sylowq8, nyb-tower, nyb-class2, trivial or baer";

    CLI::App* analyze =
        app.add_subcommand("analyze", "structural survey of a group");
    analyze->add_option("group", spec, "catalog name or group JSON file")
        ->required();
    analyze->add_option("--max-order", max_order, "size limit");
    analyze->add_flag("--json", json_out, "machine-readable output");

    CLI::App* build =
        app.add_subcommand("build", "construct a brace on a group");
    build->add_option("group", spec, "catalog name or group JSON file")
        ->required();
    build->add_option("--method", method, method_help);
    build->add_option("--seed", seed, "seed for sampled checks");
    build->add_option("--max-order", max_order, "size limit");
    build->add_flag("--json", json_out, "emit the brace and certificates");

    CLI::App* verify =
        app.add_subcommand("verify", "check a brace JSON file");
    verify->add_option("brace", spec, "JSON file with add and mul tables")
        ->required();
    verify->add_flag("--json", json_out, "machine-readable output");

    CLI::App* solution = app.add_subcommand(
        "solution", "derive and check the solution of a group or brace");
    solution->add_option("source", spec, "catalog name, group or brace JSON")
        ->required();
    solution->add_option("--method", method, method_help);
    solution->add_option("--seed", seed, "seed for sampled checks");
    solution->add_option("--max-order", max_order, "size limit");
    solution->add_flag("--json", json_out, "emit the solution tables");

    CLI::App* catalog =
        app.add_subcommand("catalog", "list the built-in groups");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze)
            return cmd_analyze(resolve_group(spec, max_order), json_out,
                               std::cout);
        if (*build)
            return cmd_build(resolve_group(spec, max_order), method, seed,
                             json_out, std::cout);
        if (*verify) return cmd_verify(load_brace(spec), json_out, std::cout);
        if (*solution) {
            SkewBrace b = [&] {
                if (is_json_path(spec)) {
                    json j = detail::load_json_file(spec);
                    if (j.contains("add") && j.contains("mul"))
                        return brace_from_json(j);
                    FiniteGroup g = group_from_json(j);
                    if (g.n > max_order)
                        throw TooLarge("group of order " +
                                       std::to_string(g.n) +
                                       " exceeds the limit of " +
                                       std::to_string(max_order));
                    std::string chosen =
                        method == "auto" ? pick_method(g) : method;
                    return run_method(g, chosen, seed).brace;
                }
                FiniteGroup g = resolve_group(spec, max_order);
                std::string chosen =
                    method == "auto" ? pick_method(g) : method;
                return run_method(g, chosen, seed).brace;
            }();
            return cmd_solution(b, json_out, std::cout);
        }
        if (*catalog) return cmd_catalog(std::cout);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
